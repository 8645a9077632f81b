// mzv: parse zeta expressions, generate and verify double-zeta identities,
// evaluate constants with guaranteed error bounds, and inspect the
// weight-graded coaction.

#include "mzv/mzv.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

using namespace mzv;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

int env_digits() {
    if (const char* s = std::getenv("MZV_DIGITS")) {
        int d = std::atoi(s);
        if (d >= 10) return d;
    }
    return 40;
}

std::string env_cache_dir() {
    if (const char* s = std::getenv("MZV_CACHE_DIR")) return s;
    return "./mzv-cache";
}

struct IdentityRequest {
    std::string name;
    int k = 1, l = 1, n = 2;
    bool k_set = false, n_set = false;
};

Identity make_identity(const IdentityRequest& r) {
    if (r.name == "depth1") return depth1_reduction(r.n_set ? r.n : (r.k_set ? r.k : 2));
    if (r.name == "dihedral") return dihedral(r.k, r.l);
    if (r.name == "descent") return descent_even(r.k, r.l);
    if (r.name == "goal") return goal_regularization(r.k);
    if (r.name == "theorem1") return theorem1(r.k);
    if (r.name == "pushdown39") return pushdown_39();
    if (r.name == "assemble-theorem1") return assemble_theorem1(r.k);
    throw std::invalid_argument("unknown identity '" + r.name + "'");
}

void print_ball(const Ball& b, int digits) {
    std::printf("%s +/- %s\n", b.mid_str(std::size_t(digits)).c_str(), b.rad_str().c_str());
}

void add_param_opts(CLI::App* cmd, IdentityRequest& req) {
    cmd->add_option("--k", req.k, "family parameter k")->check(CLI::PositiveNumber)
        ->each([&](const std::string&) { req.k_set = true; });
    cmd->add_option("--l", req.l, "family parameter l")->check(CLI::PositiveNumber);
    cmd->add_option("--n", req.n, "depth-1 parameter n")
        ->each([&](const std::string&) { req.n_set = true; });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact and high-precision toolkit for alternating double zeta values"};
    app.require_subcommand(1);

    // eval
    std::string eval_text;
    int eval_digits = env_digits();
    bool eval_json = false;
    std::string eval_cache = env_cache_dir();
    auto* eval_cmd = app.add_subcommand("eval", "evaluate an expression to a guaranteed ball");
    eval_cmd->add_option("expr", eval_text, "expression, e.g. \"z(2,-10) + 10*z(1,-11)\"")
        ->required();
    eval_cmd->add_option("--digits", eval_digits, "guaranteed decimal digits");
    eval_cmd->add_flag("--json", eval_json, "machine-readable output");
    eval_cmd->add_option("--cache-dir", eval_cache, "constant cache directory");

    // identity list | show
    auto* id_cmd = app.add_subcommand("identity", "generate identity families");
    id_cmd->require_subcommand(1);
    auto* id_list = id_cmd->add_subcommand("list", "list the known families");
    IdentityRequest show_req;
    bool show_json = false;
    auto* id_show = id_cmd->add_subcommand("show", "print one identity");
    id_show->add_option("name", show_req.name, "family name")->required();
    add_param_opts(id_show, show_req);
    id_show->add_flag("--json", show_json, "canonical JSON serialization");

    // verify
    IdentityRequest verify_req;
    int verify_digits = env_digits();
    bool verify_json = false;
    std::string verify_cache = env_cache_dir();
    auto* verify_cmd = app.add_subcommand("verify", "numerically verify an identity");
    verify_cmd->add_option("name", verify_req.name, "family name")->required();
    add_param_opts(verify_cmd, verify_req);
    verify_cmd->add_option("--digits", verify_digits, "guaranteed decimal digits");
    verify_cmd->add_flag("--json", verify_json, "machine-readable report");
    verify_cmd->add_option("--cache-dir", verify_cache, "constant cache directory");

    // coaction
    std::string co_text;
    int co_r = 1;
    bool co_reduce = false;
    auto* co_cmd = app.add_subcommand("coaction", "weight-r coaction of an expression");
    co_cmd->add_option("expr", co_text, "expression over z/zr/I")->required();
    co_cmd->add_option("--r", co_r, "weight of the left factor")->check(CLI::PositiveNumber);
    co_cmd->add_flag("--reduce", co_reduce, "reduce weight-1 left factors to the log-2 line");

    // cache
    auto* cache_cmd = app.add_subcommand("cache", "inspect or clear the constant cache");
    cache_cmd->require_subcommand(1);
    std::string cache_dir = env_cache_dir();
    auto* cache_stats = cache_cmd->add_subcommand("stats", "entry counts and file size");
    cache_stats->add_option("--dir", cache_dir, "cache directory");
    auto* cache_clear = cache_cmd->add_subcommand("clear", "remove the cache file");
    cache_clear->add_option("--dir", cache_dir, "cache directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*eval_cmd) {
            Expr e = parse(eval_text);
            auto oc = open_cache_validated(eval_cache);
            if (!oc.loaded_ok)
                std::fprintf(stderr, "warning: cache failed validation, starting fresh\n");
            Ball b = eval_expr(e, Precision(eval_digits), &oc.cache);
            if (eval_json)
                std::printf("%s\n", eval_to_json(print(e), b, eval_digits).dump(2).c_str());
            else
                print_ball(b, eval_digits);
            return kExitPass;
        }
        if (*id_list) {
            std::printf("depth1             --n N      zeta(nbar) in terms of zeta(n), n >= 2\n");
            std::printf("dihedral           --k K --l L  regularized double-zeta symmetry\n");
            std::printf("descent            --k K --l L  even-even descent to level 1\n");
            std::printf("goal               --k K      regularization of the theorem LHS\n");
            std::printf("theorem1           --k K      the depth-2 evaluation\n");
            std::printf("pushdown39         depth-4 pushdown at weight 12\n");
            std::printf("assemble-theorem1  --k K      mechanical replay of the proof\n");
            return kExitPass;
        }
        if (*id_show) {
            Identity id = make_identity(show_req);
            if (show_json)
                std::printf("%s\n", identity_to_json(id).dump(2).c_str());
            else
                std::printf("%s\n", to_string(id).c_str());
            return kExitPass;
        }
        if (*verify_cmd) {
            Identity id = make_identity(verify_req);
            auto oc = open_cache_validated(verify_cache);
            if (!oc.loaded_ok)
                std::fprintf(stderr, "warning: cache failed validation, starting fresh\n");
            auto rep = eval_identity(id, Precision(verify_digits), &oc.cache);
            if (verify_json) {
                std::printf("%s\n", report_to_json(id, rep).dump(2).c_str());
            } else {
                std::printf("%s: %s  residual %s +/- %s at %d digits\n", id.display_name().c_str(),
                            rep.pass ? "pass" : "FAIL", rep.residual.mid_str(8).c_str(),
                            rep.residual.rad_str().c_str(), verify_digits);
            }
            return rep.pass ? kExitPass : kExitFail;
        }
        if (*co_cmd) {
            Expr e = parse(co_text);
            LinComb<WordProduct> lowered = expr_to_word_products(e);
            if (co_reduce) {
                if (co_r != 1) {
                    std::fprintf(stderr, "--reduce applies to --r 1 only\n");
                    return kExitUsage;
                }
                auto red = d1_log2_class(lowered);
                if (red.is_zero()) {
                    std::printf("0\n");
                } else {
                    for (const auto& [wp, q] : red.terms())
                        std::printf("%s * log2 (x) %s\n", to_string(q).c_str(),
                                    to_string(wp).c_str());
                }
                return kExitPass;
            }
            TensorComb out;
            for (const auto& [wp, q] : lowered.terms()) {
                if (wp.words.empty()) continue;  // constants are killed by D_r
                if (wp.words.size() > 1) {
                    std::fprintf(stderr, "products require --reduce with --r 1\n");
                    return kExitUsage;
                }
                TensorComb t = coaction_Dr(wp.words[0], co_r);
                t *= q;
                out += t;
            }
            if (out.is_zero()) {
                std::printf("0\n");
            } else {
                for (const auto& [lr, q] : out.terms())
                    std::printf("%s * %s (x) %s\n", to_string(q).c_str(),
                                to_string(lr.first).c_str(), to_string(lr.second).c_str());
            }
            return kExitPass;
        }
        if (*cache_stats) {
            auto cache = ConstantCache::bind_dir(cache_dir);
            std::uintmax_t bytes = 0;
            std::error_code ec;
            bytes = std::filesystem::file_size(ConstantCache::file_in(cache_dir), ec);
            if (ec) bytes = 0;
            std::printf("entries: %zu\nkeys: %zu\nfile: %s (%ju bytes)\n", cache.entry_count(),
                        cache.key_count(), ConstantCache::file_in(cache_dir).c_str(),
                        static_cast<std::uintmax_t>(bytes));
            return kExitPass;
        }
        if (*cache_clear) {
            ConstantCache::clear_dir(cache_dir);
            std::printf("cleared %s\n", ConstantCache::file_in(cache_dir).c_str());
            return kExitPass;
        }
    } catch (const ParseError& e) {
        std::fprintf(stderr, "parse error: %s\n", e.what());
        return kExitUsage;
    } catch (const DivergentWordError& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return kExitFail;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "invalid argument: %s\n", e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitFail;
    }
    return kExitUsage;
}
