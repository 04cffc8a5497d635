// Command line front end: hull computation, hull reduction and increase,
// quantum code parameters, and Cartesian evaluation code queries over the
// JSON code pair files under data/ or anywhere else.
//
// Exit codes: 0 ok, 1 internal, 2 parse, 3 range or precondition,
// 4 engine capability (no witness, degenerate or unsatisfiable instance),
// 5 enumeration budget.

#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "relhull/examples.hpp"
#include "relhull/hull.hpp"
#include "relhull/quantum.hpp"

using namespace relhull;
using nlohmann::ordered_json;

namespace {

int exit_code_for(Err e) {
    switch (e) {
        case Err::ParseError:
            return 2;
        case Err::NoWitnessFound:
        case Err::ConditionUnsatisfiable:
        case Err::OddExtensionDegree:
        case Err::DegenerateDelta:
        case Err::SandwichViolated:
        case Err::WeightOneAmbiguity:
        case Err::NoTwistFound:
        case Err::IncreaseHypothesisNotWitnessed:
            return 4;
        case Err::EnumerationTooLarge:
            return 5;
        case Err::Internal:
            return 1;
        default:
            return 3;
    }
}

struct InputOpts {
    std::string path;
    std::string example;
    std::string c1_name = "c1";
    std::string c2_name = "c2";
};

void add_input_opts(CLI::App* sub, InputOpts& in) {
    sub->add_option("file", in.path, "path to a JSON code pair file");
    sub->add_option("--example", in.example, "use a bundled example by id instead of a file");
    sub->add_option("--c1", in.c1_name, "name of the first code in the file")->capture_default_str();
    sub->add_option("--c2", in.c2_name, "name of the second code in the file")->capture_default_str();
}

CodePairFile load_input(const InputOpts& in) {
    if (!in.example.empty()) {
        const Example* ex = find_example(in.example);
        if (!ex) fail(Err::ParseError, "unknown example id " + in.example);
        return ex->file;
    }
    if (in.path.empty()) fail(Err::ParseError, "no input file or --example given");
    return load_code_pair(in.path);
}

LinearCode code_1(const CodePairFile& f, const InputOpts& in) {
    return LinearCode::from_matrix(find_code(f, in.c1_name));
}

LinearCode code_2(const CodePairFile& f, const InputOpts& in) {
    return LinearCode::from_matrix(find_code(f, in.c2_name));
}

const CartesianGrid& grid_of(const CodePairFile& f) {
    if (!f.grid) fail(Err::ParseError, "input file has no grid section");
    return *f.grid;
}

std::string bracket(const CSSParams& p) {
    std::ostringstream os;
    os << "[[" << p.n << ", " << p.kappa << ", " << p.delta << "; " << p.c << "]]_" << p.q;
    return os.str();
}

void print_rows(const MatrixGF& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) std::cout << (j ? " " : "") << m.at(i, j);
        std::cout << "\n";
    }
}

void print_vector(const char* label, const std::vector<std::uint32_t>& v) {
    std::cout << label;
    for (auto x : v) std::cout << " " << x;
    std::cout << "\n";
}

void print_css(const CSSParams& p) {
    std::cout << bracket(p) << "\n";
    std::cout << "pure: " << (p.pure ? "yes" : "no") << "\n";
    std::cout << "singleton slack: " << p.singleton_slack << "\n";
}

void print_trace(const ReductionTrace& t, std::size_t initial_dim) {
    std::cout << "initial hull " << initial_dim << "\n";
    if (t.increase) {
        print_vector("increase lambda:", t.increase->lambda());
        print_vector("increase sigma:", t.increase->sigma());
        std::cout << "hull raised to " << t.dim_after_increase << "\n";
    }
    for (const auto& s : t.steps) {
        if (s.kind == WitnessKind::Scaling)
            std::cout << "scaling coordinate " << s.coord_i << " by " << s.scalar;
        else
            std::cout << "transposition (" << s.coord_i << ", " << s.coord_j << ")";
        std::cout << " -> hull " << s.hull_dim_after << "\n";
    }
    std::cout << "final generator rows:\n";
    print_rows(t.final_code.gen());
}

int run(int argc, char** argv) {
    CLI::App app{"relative hull toolkit for linear codes over finite fields"};
    app.require_subcommand(1);
    app.footer("Coordinates in witness output are 0-based.  Exit codes: 0 ok, 2 parse,\n"
               "3 range/precondition, 4 engine capability, 5 enumeration budget.");

    // hull
    InputOpts hull_in;
    std::uint32_t hull_e = 0;
    bool hull_json = false, hull_diag = false;
    std::uint64_t hull_seed = 0, hull_trials = DiagonalSweepConfig{}.trials;
    auto* cmd_hull = app.add_subcommand("hull", "relative hull dimension of c1 with respect to c2");
    add_input_opts(cmd_hull, hull_in);
    cmd_hull->add_option("--galois", hull_e, "Galois parameter e for the p^e inner product");
    cmd_hull->add_flag("--json", hull_json, "emit JSON");
    cmd_hull->add_flag("--diagonal-max", hull_diag,
                       "maximize the hull over diagonal scalings of c1 instead");
    cmd_hull->add_option("--seed", hull_seed, "seed for the sampled diagonal sweep");
    cmd_hull->add_option("--trials", hull_trials, "sample size beyond the exhaustive budget");
    cmd_hull->callback([&] {
        CodePairFile f = load_input(hull_in);
        auto c1 = code_1(f, hull_in), c2 = code_2(f, hull_in);
        if (hull_diag) {
            DiagonalMaxReport r = diagonal_hull_max(c1, c2, {hull_trials, hull_seed});
            if (hull_json) {
                std::cout << to_json(r) << "\n";
                return;
            }
            std::cout << "diagonal max hull " << r.achieved << (r.exact ? " (exact)" : " (sampled)")
                      << "\n";
            std::cout << "max weight bound " << r.bound_maxwt << ", anticode bound "
                      << r.bound_anticode << "\n";
            print_vector("best lambda:", r.best_lambda);
            return;
        }
        HullReport r = hull_dim(c1, c2, hull_e);
        if (hull_json) {
            std::cout << to_json(r) << "\n";
            return;
        }
        std::cout << "relative hull dimension " << r.dim_hull << " (bounds " << r.lower_bound
                  << ".." << r.upper_bound << "), product rank " << r.rank_product << "\n";
    });

    // reduce
    InputOpts red_in;
    std::int64_t red_to = -1;
    std::uint64_t red_steps = 0;
    std::uint32_t red_e = 0;
    bool red_json = false;
    auto* cmd_reduce = app.add_subcommand("reduce", "lower the hull by scaling or transposition witnesses");
    add_input_opts(cmd_reduce, red_in);
    auto* red_to_opt = cmd_reduce->add_option("--to", red_to, "target hull dimension");
    auto* red_steps_opt = cmd_reduce->add_option("--steps", red_steps, "number of single steps to take");
    cmd_reduce->add_option("--galois", red_e, "Galois parameter e");
    cmd_reduce->add_flag("--json", red_json, "emit JSON");
    cmd_reduce->callback([&] {
        CodePairFile f = load_input(red_in);
        auto c1 = code_1(f, red_in), c2 = code_2(f, red_in);
        std::size_t initial = hull_dim(c1, c2, red_e).dim_hull;
        if (red_to_opt->count() && red_steps_opt->count())
            fail(Err::ParseError, "--to and --steps are mutually exclusive");
        if (!red_to_opt->count() && !red_steps_opt->count())
            fail(Err::ParseError, "one of --to or --steps is required");
        if (red_steps_opt->count()) {
            if (red_steps > initial) fail(Err::TargetOutOfRange, "more steps than hull dimensions");
            red_to = static_cast<std::int64_t>(initial - red_steps);
        }
        if (red_to < 0) fail(Err::TargetOutOfRange, "target hull dimension is negative");
        ReductionTrace t = reduce_to(c1, c2, static_cast<std::size_t>(red_to), red_e);
        if (red_json)
            std::cout << to_json(t) << "\n";
        else
            print_trace(t, initial);
    });

    // increase
    InputOpts inc_in;
    std::uint64_t inc_seed = 0, inc_trials = IncreaseConfig{}.sigma_trials;
    bool inc_json = false;
    auto* cmd_increase = app.add_subcommand("increase", "search for a map making the hull full");
    add_input_opts(cmd_increase, inc_in);
    cmd_increase->add_option("--seed", inc_seed, "seed for the sampled permutation search");
    cmd_increase->add_option("--trials", inc_trials, "permutation samples when n > 8");
    cmd_increase->add_flag("--json", inc_json, "emit JSON");
    cmd_increase->callback([&] {
        CodePairFile f = load_input(inc_in);
        auto c1 = code_1(f, inc_in), c2 = code_2(f, inc_in);
        auto res = increase_to_full(c1, c2, {inc_trials, inc_seed});
        if (!res)
            fail(Err::NoWitnessFound,
                 "no witness within the search budget; absence is not a certificate");
        std::size_t dim = hull_dim(c1, res->c2_new).dim_hull;
        if (inc_json) {
            ordered_json j{{"lambda", res->map.lambda()},
                           {"sigma", res->map.sigma()},
                           {"dim_hull", dim}};
            std::cout << j.dump(2) << "\n";
            return;
        }
        print_vector("lambda:", res->map.lambda());
        print_vector("sigma:", res->map.sigma());
        std::cout << "hull dimension " << dim << " (full)\n";
    });

    // set-hull
    InputOpts set_in;
    std::int64_t set_to = 0;
    std::uint64_t set_seed = 0, set_trials = IncreaseConfig{}.sigma_trials;
    bool set_json = false;
    auto* cmd_set = app.add_subcommand("set-hull", "reach an exact hull dimension, raising first if needed");
    add_input_opts(cmd_set, set_in);
    cmd_set->add_option("--to", set_to, "target hull dimension")->required();
    cmd_set->add_option("--seed", set_seed, "seed for the increase leg");
    cmd_set->add_option("--trials", set_trials, "permutation samples when n > 8");
    cmd_set->add_flag("--json", set_json, "emit JSON");
    cmd_set->callback([&] {
        CodePairFile f = load_input(set_in);
        auto c1 = code_1(f, set_in), c2 = code_2(f, set_in);
        if (set_to < 0) fail(Err::TargetOutOfRange, "target hull dimension is negative");
        std::size_t initial = hull_dim(c1, c2).dim_hull;
        ReductionTrace t = set_hull_dim(c1, c2, static_cast<std::size_t>(set_to),
                                        {set_trials, set_seed});
        if (set_json)
            std::cout << to_json(t) << "\n";
        else
            print_trace(t, initial);
    });

    // css
    InputOpts css_in;
    std::int64_t css_target = -1;
    bool css_json = false, css_ladder = false, css_herm = false;
    auto* cmd_css = app.add_subcommand("css", "quantum code parameters [[n, k, d; c]] of the pair");
    add_input_opts(cmd_css, css_in);
    auto* css_target_opt = cmd_css->add_option("--target-c", css_target,
                                               "tune the entanglement parameter to this value");
    cmd_css->add_flag("--ladder", css_ladder, "print parameters for every reachable c");
    cmd_css->add_flag("--hermitian", css_herm, "Hermitian construction from c1 alone");
    cmd_css->add_flag("--json", css_json, "emit JSON");
    cmd_css->callback([&] {
        CodePairFile f = load_input(css_in);
        auto c1 = code_1(f, css_in);
        if (css_herm) {
            CSSParams p = hermitian(c1);
            if (css_json)
                std::cout << to_json(p) << "\n";
            else
                print_css(p);
            return;
        }
        auto c2 = code_2(f, css_in);
        if (css_ladder) {
            HullReport h = hull_dim(c1, c2);
            std::size_t c_now = c1.k() - h.dim_hull;
            std::size_t c_max = c1.k() - h.lower_bound;
            ordered_json rungs = ordered_json::array();
            for (std::size_t c = c_now; c <= c_max; ++c) {
                try {
                    CSSParams p = css_with_target_c(c1, c2, c).second;
                    if (css_json)
                        rungs.push_back(ordered_json::parse(to_json(p)));
                    else
                        std::cout << "c=" << c << ": " << bracket(p)
                                  << (p.pure ? " pure" : " impure") << "\n";
                } catch (const Error& e) {
                    if (e.code() != Err::DegenerateDelta) throw;
                    if (css_json)
                        rungs.push_back(ordered_json{{"c", c}, {"degenerate", true}});
                    else
                        std::cout << "c=" << c << ": degenerate (kappa 0)\n";
                }
            }
            if (css_json) std::cout << rungs.dump(2) << "\n";
            return;
        }
        if (css_target_opt->count()) {
            if (css_target < 0) fail(Err::TargetOutOfRange, "target c is negative");
            auto [c2_new, p] = css_with_target_c(c1, c2, static_cast<std::size_t>(css_target));
            if (css_json) {
                ordered_json j = ordered_json::parse(to_json(p));
                ordered_json rows = ordered_json::array();
                for (std::size_t i = 0; i < c2_new.k(); ++i) rows.push_back(c2_new.gen().row(i));
                j["c2_rows"] = rows;
                std::cout << j.dump(2) << "\n";
                return;
            }
            print_css(p);
            std::cout << "new c2 generator rows:\n";
            print_rows(c2_new.gen());
            return;
        }
        CSSParams p = css(c1, c2);
        if (css_json)
            std::cout << to_json(p) << "\n";
        else
            print_css(p);
    });

    // hermitian
    InputOpts herm_in;
    bool herm_json = false;
    auto* cmd_herm = app.add_subcommand("hermitian", "Hermitian quantum construction from c1");
    add_input_opts(cmd_herm, herm_in);
    cmd_herm->add_flag("--json", herm_json, "emit JSON");
    cmd_herm->callback([&] {
        CodePairFile f = load_input(herm_in);
        CSSParams p = hermitian(code_1(f, herm_in));
        if (herm_json)
            std::cout << to_json(p) << "\n";
        else
            print_css(p);
    });

    // cartesian
    InputOpts cart_in;
    std::string cart_set;
    bool cart_hyp = false, cart_json = false;
    std::uint64_t cart_d = 0;
    auto* cmd_cart = app.add_subcommand("cartesian", "evaluation code and hyperbolic set queries");
    add_input_opts(cmd_cart, cart_in);
    cmd_cart->add_option("--set", cart_set, "summarize the evaluation code of this exponent set");
    cmd_cart->add_flag("--hyperbolic", cart_hyp, "summarize the hyperbolic set of designed distance --d");
    cmd_cart->add_option("--d", cart_d, "designed distance for --hyperbolic");
    cmd_cart->callback([&] {
        CodePairFile f = load_input(cart_in);
        const CartesianGrid& grid = grid_of(f);
        if (cart_set.empty() == !cart_hyp)
            fail(Err::ParseError, "exactly one of --set or --hyperbolic is required");
        if (cart_hyp) {
            ExponentSet h = hyperbolic(cart_d, grid);
            ExponentSet hd = hyperbolic_dual(cart_d, grid);
            if (cart_json) {
                ordered_json j{{"d", cart_d},
                               {"hyperbolic", h.exponents()},
                               {"dual_set", hd.exponents()},
                               {"n", grid.n()}};
                std::cout << j.dump(2) << "\n";
                return;
            }
            std::cout << "hyperbolic set for d=" << cart_d << ": " << h.size() << " monomials\n";
            std::cout << "dual set: " << hd.size() << " monomials\n";
            std::cout << "partition: " << h.size() << " + " << hd.size() << " = " << grid.n()
                      << "\n";
            return;
        }
        const ExponentSet& m = find_exponent_set(f, cart_set);
        LinearCode c = eval_code(m, grid);
        bool dec = is_decreasing(m);
        std::uint64_t fbound = footprint_bound(m, grid);
        long long dist = -1;
        try {
            dist = static_cast<long long>(min_distance(c));
        } catch (const Error& e) {
            if (e.code() != Err::EnumerationTooLarge) throw;
        }
        if (cart_json) {
            ordered_json j{{"set", cart_set}, {"n", c.n()},
                           {"k", c.k()},      {"decreasing", dec},
                           {"footprint_bound", fbound}};
            if (dist >= 0) j["min_distance"] = dist;
            std::cout << j.dump(2) << "\n";
            return;
        }
        std::cout << "code of " << cart_set << ": n " << c.n() << ", dimension " << c.k() << "\n";
        std::cout << "decreasing: " << (dec ? "yes" : "no") << "\n";
        std::cout << "footprint bound " << fbound << "\n";
        if (dist >= 0)
            std::cout << "minimum distance " << dist << "\n";
        else
            std::cout << "minimum distance not computed (enumeration budget)\n";
    });
    cmd_cart->add_flag("--json", cart_json, "emit JSON");

    // twist
    InputOpts tw_in;
    std::uint64_t tw_d = 0;
    bool tw_json = false;
    auto* cmd_twist = app.add_subcommand("twist", "diagonal map tying the hyperbolic dual pair together");
    add_input_opts(cmd_twist, tw_in);
    cmd_twist->add_option("--d", tw_d, "designed distance")->required();
    cmd_twist->add_flag("--json", tw_json, "emit JSON");
    cmd_twist->callback([&] {
        CodePairFile f = load_input(tw_in);
        TwistReport r = dual_twist(tw_d, grid_of(f));
        if (tw_json) {
            std::cout << to_json(r) << "\n";
            return;
        }
        print_vector("lambda:", r.lambda);
        std::cout << "verified: " << (r.verified ? "yes" : "no") << "\n";
    });

    // examples
    bool ex_list = false;
    auto* cmd_examples = app.add_subcommand("examples", "list bundled examples or rerun their published values");
    cmd_examples->add_flag("--list", ex_list, "print example ids and summaries");
    cmd_examples->callback([&] {
        if (ex_list) {
            for (const auto& ex : example_registry())
                std::cout << ex.id << std::string(ex.id.size() < 26 ? 26 - ex.id.size() : 2, ' ')
                          << ex.summary << "\n";
            return;
        }
        bool all_ok = true;
        for (const auto& chk : example_checks()) {
            bool ok = chk.run();
            all_ok = all_ok && ok;
            std::cout << (ok ? "PASS" : "FAIL") << "  " << chk.id << ": " << chk.what << "\n";
        }
        if (!all_ok) fail(Err::Internal, "a published value failed to reproduce");
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "internal: " << e.what() << "\n";
        return 1;
    }
}
