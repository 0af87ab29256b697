// tshape: command-line front end for the cyclic t-shape calculus.
//
// Exit codes: 0 success, 1 usage/parse error, 2 domain error.  Errors are
// printed to stderr as a single line `error: <kind>: <detail>`.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "tshape/tshape.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw tshape::DomainError("io", "cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw tshape::DomainError("io", "cannot write '" + path + "'");
    out << content;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace tshape;

    CLI::App app{"cyclic t-shape calculus: Magnus differentiation, blow-ups and shape classes"};
    app.require_subcommand(1);
    bool runs_style = false;
    app.add_flag("--runs", runs_style, "print shapes in run notation instead of compact");

    std::function<void()> action;
    const auto fmt = [&runs_style](const Shape& s) {
        return format_shape(s, runs_style ? ShapeStyle::runs : ShapeStyle::compact);
    };

    // classify <SHAPE> [--json]
    {
        auto* sc = app.add_subcommand("classify", "classify one shape");
        sc->fallthrough();
        auto shape_arg = std::make_shared<std::string>();
        auto json = std::make_shared<bool>(false);
        sc->add_option("shape", *shape_arg, "shape (compact or run notation)")->required();
        sc->add_flag("--json", *json, "emit a JSON object");
        sc->callback([&, shape_arg, json] {
            action = [&, shape_arg, json] {
                const Classification c = classify(parse_shape(*shape_arg));
                if (*json) {
                    std::cout << format_classification_json(c) << "\n";
                    return;
                }
                const auto b = [](bool v) { return v ? "true" : "false"; };
                std::cout << "width=" << c.width << "\n"
                          << "degree=" << c.degree << "\n"
                          << "power=" << b(c.is_power) << "\n"
                          << "one_clump=" << b(c.is_one_clump) << "\n"
                          << "suitable=" << b(c.is_suitable) << "\n"
                          << "cg_good=" << b(c.is_cg_good) << "\n"
                          << "amenable=" << b(c.is_amenable) << "\n"
                          << "orbit_length=" << c.orbit_length << "\n"
                          << "terminal=" << fmt(c.terminal) << "\n";
                std::cout << "known_good=";
                for (size_t i = 0; i < c.known_good.size(); ++i)
                    std::cout << (i ? "," : "") << c.known_good[i];
                std::cout << "\n";
            };
        });
    }

    // derive <SHAPE> [--steps N | --orbit]
    {
        auto* sc = app.add_subcommand("derive", "apply the Magnus derivative");
        sc->fallthrough();
        auto shape_arg = std::make_shared<std::string>();
        auto steps = std::make_shared<int>(1);
        auto orbit_flag = std::make_shared<bool>(false);
        sc->add_option("shape", *shape_arg, "shape")->required();
        auto* so = sc->add_option("--steps", *steps, "number of derivative steps")
                       ->check(CLI::NonNegativeNumber);
        sc->add_flag("--orbit", *orbit_flag, "print the whole orbit down to the fixed point")
            ->excludes(so);
        sc->callback([&, shape_arg, steps, orbit_flag] {
            action = [&, shape_arg, steps, orbit_flag] {
                const Shape t = parse_shape(*shape_arg);
                if (*orbit_flag) {
                    for (const Shape& s : orbit(t).shapes) std::cout << fmt(s) << "\n";
                    return;
                }
                Shape cur = t;
                for (int i = 0; i < *steps; ++i) cur = derivative(cur);
                std::cout << fmt(cur) << "\n";
            };
        });
    }

    // census --max-width N [--csv PATH] [--inversion] [--workers W]
    {
        auto* sc = app.add_subcommand("census", "classify every necklace up to a width");
        sc->fallthrough();
        auto max_width = std::make_shared<int>(0);
        auto csv_path = std::make_shared<std::string>();
        auto inversion = std::make_shared<bool>(false);
        auto workers = std::make_shared<int>(1);
        sc->add_option("--max-width", *max_width, "largest width to census")
            ->required()
            ->check(CLI::PositiveNumber);
        sc->add_option("--csv", *csv_path, "write the table to this file instead of stdout");
        sc->add_flag("--inversion", *inversion, "count rotation+inversion classes (bracelets)");
        sc->add_option("--workers", *workers, "worker threads per width")
            ->check(CLI::PositiveNumber);
        sc->callback([&, max_width, csv_path, inversion, workers] {
            action = [&, max_width, csv_path, inversion, workers] {
                const std::string csv =
                    census_csv(census_table(*max_width, *workers, *inversion));
                if (csv_path->empty())
                    std::cout << csv;
                else
                    write_file(*csv_path, csv);
            };
        });
    }

    // blowup <SHAPE> --m M (--seed S [--max-block-width B] | --blocks FILE)
    {
        auto* sc = app.add_subcommand("blowup", "blow a shape up with m-blocks");
        sc->fallthrough();
        auto shape_arg = std::make_shared<std::string>();
        auto m = std::make_shared<int>(1);
        auto seed = std::make_shared<uint64_t>(0);
        auto max_bw = std::make_shared<int>(-1);
        auto blocks_path = std::make_shared<std::string>();
        sc->add_option("shape", *shape_arg, "base shape")->required();
        sc->add_option("--m", *m, "block depth")->required()->check(CLI::PositiveNumber);
        auto* seed_opt = sc->add_option("--seed", *seed, "draw blocks deterministically");
        auto* bw_opt =
            sc->add_option("--max-block-width", *max_bw, "widest block to draw (default 2m+4)");
        auto* blocks_opt =
            sc->add_option("--blocks", *blocks_path, "read a blow-up spec file instead");
        blocks_opt->excludes(seed_opt)->excludes(bw_opt);
        sc->callback([&, shape_arg, m, seed, max_bw, blocks_path, seed_opt, blocks_opt] {
            const bool have_seed = seed_opt->count() > 0;
            const bool have_blocks = blocks_opt->count() > 0;
            action = [&, shape_arg, m, seed, max_bw, blocks_path, have_seed, have_blocks] {
                const Shape t = parse_shape(*shape_arg);
                if (have_blocks) {
                    const BlowUpSpec spec = parse_blow_up_spec(read_file(*blocks_path));
                    if (!(spec.base == t))
                        throw DomainError("spec-mismatch",
                                          "--blocks base differs from the SHAPE argument");
                    if (spec.depth != *m)
                        throw DomainError("spec-mismatch", "--blocks m differs from --m");
                    std::cout << "result=" << fmt(blow_up(spec)) << "\n";
                    return;
                }
                if (!have_seed)
                    throw CLI::RequiredError("--seed (or --blocks FILE)");
                const int bw = *max_bw >= 0 ? *max_bw : 2 * *m + 4;
                const auto [u, spec] = random_blow_up(t, *m, bw, *seed);
                std::cout << format_blow_up_spec(spec);
                std::cout << "result=" << fmt(u) << "\n";
            };
        });
    }

    // peel <SHAPE>
    {
        auto* sc = app.add_subcommand("peel", "invert a 1-blow-up");
        sc->fallthrough();
        auto shape_arg = std::make_shared<std::string>();
        sc->add_option("shape", *shape_arg, "shape to peel")->required();
        sc->callback([&, shape_arg] {
            action = [&, shape_arg] {
                const PeelResult res = peel(parse_shape(*shape_arg));
                std::cout << format_blow_up_spec(res.spec());
            };
        });
    }

    // member <U> <T> [--n N]
    {
        auto* sc = app.add_subcommand("member", "test U in B^n(T) via iterated derivatives");
        sc->fallthrough();
        auto u_arg = std::make_shared<std::string>();
        auto t_arg = std::make_shared<std::string>();
        auto n = std::make_shared<int>(0);
        sc->add_option("u", *u_arg, "candidate blow-up")->required();
        sc->add_option("t", *t_arg, "base shape")->required();
        auto* n_opt = sc->add_option("--n", *n, "blow-up depth to test")
                          ->check(CLI::NonNegativeNumber);
        sc->callback([&, u_arg, t_arg, n, n_opt] {
            const bool have_n = n_opt->count() > 0;
            action = [&, u_arg, t_arg, n, have_n] {
                const Shape u = parse_shape(*u_arg);
                const Shape t = parse_shape(*t_arg);
                if (have_n) {
                    std::cout << (is_blow_up_of(u, t, *n) ? "true" : "false") << "\n";
                    return;
                }
                const int bound = width(u) / 2 + 1;
                for (int k = 0; k <= bound; ++k) {
                    if (is_blow_up_of(u, t, k)) {
                        std::cout << "true n=" << k << "\n";
                        return;
                    }
                }
                std::cout << "false" << "\n";
            };
        });
    }

    // blocks --m M --width W [--full]
    {
        auto* sc = app.add_subcommand("blocks", "enumerate m-blocks of one width");
        sc->fallthrough();
        auto m = std::make_shared<int>(0);
        auto w = std::make_shared<int>(0);
        auto full = std::make_shared<bool>(false);
        sc->add_option("--m", *m, "depth bound")->required()->check(CLI::NonNegativeNumber);
        sc->add_option("--width", *w, "block width")->required()->check(CLI::NonNegativeNumber);
        sc->add_flag("--full", *full, "only blocks attaining level -m");
        sc->callback([&, m, w, full] {
            action = [&, m, w, full] {
                for (const Block& b : enumerate_blocks(*m, *w, *full))
                    std::cout << format_block_line(b) << "\n";
            };
        });
    }

    // nf <SHAPE> --m M --seed S [--max-block-width B] [--simplify]
    {
        auto* sc = app.add_subcommand("nf", "draw a normal-form word over a base shape");
        sc->fallthrough();
        auto shape_arg = std::make_shared<std::string>();
        auto m = std::make_shared<int>(1);
        auto seed = std::make_shared<uint64_t>(0);
        auto max_bw = std::make_shared<int>(-1);
        auto simplify = std::make_shared<bool>(false);
        sc->add_option("shape", *shape_arg, "base shape")->required();
        sc->add_option("--m", *m, "block depth")->required()->check(CLI::PositiveNumber);
        sc->add_option("--seed", *seed, "deterministic draw")->required();
        sc->add_option("--max-block-width", *max_bw, "widest block to draw (default 2m+4)");
        sc->add_flag("--simplify", *simplify,
                     "drain all designated cancellations before printing");
        sc->callback([&, shape_arg, m, seed, max_bw, simplify] {
            action = [&, shape_arg, m, seed, max_bw, simplify] {
                const Shape t = parse_shape(*shape_arg);
                const int bw = *max_bw >= 0 ? *max_bw : 2 * *m + 4;
                NormalFormWord w = random_nf(t, *m, bw, *seed);
                if (*simplify)
                    while (w.total_cancellations() > 0) w = nf_simplify(w);
                std::cout << format_nf(w);
                std::cout << "realize=" << fmt(realize(w)) << "\n";
            };
        });
    }

    // graph <SHAPE> [--csv PATH | --svg PATH]
    {
        auto* sc = app.add_subcommand("graph", "emit the graph trace of a shape");
        sc->fallthrough();
        auto shape_arg = std::make_shared<std::string>();
        auto csv_path = std::make_shared<std::string>();
        auto svg_path = std::make_shared<std::string>();
        sc->add_option("shape", *shape_arg, "shape")->required();
        auto* csv_opt = sc->add_option("--csv", *csv_path, "write CSV to this file");
        sc->add_option("--svg", *svg_path, "write a polyline SVG to this file")
            ->excludes(csv_opt);
        sc->callback([&, shape_arg, csv_path, svg_path] {
            action = [&, shape_arg, csv_path, svg_path] {
                const GraphTrace tr = graph_trace(parse_shape(*shape_arg));
                if (!svg_path->empty()) {
                    write_file(*svg_path, trace_svg(tr));
                    return;
                }
                if (!csv_path->empty())
                    write_file(*csv_path, trace_csv(tr));
                else
                    std::cout << trace_csv(tr);
            };
        });
    }

    // witnesses --max-width N [--predicate P]
    {
        auto* sc = app.add_subcommand("witnesses", "list necklaces satisfying a predicate");
        sc->fallthrough();
        auto max_width = std::make_shared<int>(0);
        auto predicate = std::make_shared<std::string>("amenable_not_cg");
        sc->add_option("--max-width", *max_width, "largest width to search")
            ->required()
            ->check(CLI::PositiveNumber);
        sc->add_option("--predicate", *predicate,
                       "terms joined with '&', negate with '!' (default amenable_not_cg)");
        sc->callback([&, max_width, predicate] {
            action = [&, max_width, predicate] {
                for (const Shape& s : find_witnesses(*max_width, *predicate))
                    std::cout << fmt(s) << "\n";
            };
        });
    }

    // extract <EQUATION>
    {
        auto* sc = app.add_subcommand("extract", "extract the t-shape of an equation word");
        sc->fallthrough();
        auto eq = std::make_shared<std::string>();
        sc->add_option("equation", *eq, "whitespace-separated tokens, e.g. \"g1 t g2 t^-1\"")
            ->required();
        sc->callback([&, eq] {
            action = [&, eq] { std::cout << fmt(extract_shape(parse_equation(*eq))) << "\n"; };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: usage: " << e.what() << "\n";
        return 1;
    }

    try {
        action();
    } catch (const ParseError& e) {
        std::cerr << "error: parse: " << e.what() << "\n";
        return 1;
    } catch (const CLI::RequiredError& e) {
        std::cerr << "error: usage: " << e.what() << "\n";
        return 1;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.kind << ": " << e.what() << "\n";
        return 2;
    }
    return 0;
}
