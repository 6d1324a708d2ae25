#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

#include "mzv/errors.hpp"
#include "mzv/eval_finite.hpp"
#include "mzv/eval_real.hpp"
#include "mzv/json_io.hpp"
#include "mzv/poset.hpp"
#include "mzv/relations.hpp"
#include "mzv/suites.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
    std::string format = "text";
    int prec = 192;
    std::string primes = "11..1000";
    std::string tol;  // "1e-25" or "25"; empty = evaluator default
    int ones = 0;     // {1}^n appended to --k / --index
};

int default_prec() {
    if (const char* env = std::getenv("MZV_PREC")) {
        try {
            return std::max(64, std::stoi(env));
        } catch (const std::exception&) {
        }
    }
    return 192;
}

mzv::Index read_index(const std::string& text, int ones) {
    return mzv::concat(mzv::parse_index(text), mzv::Index::ones(ones));
}

std::pair<uint64_t, uint64_t> parse_prime_range(const std::string& s) {
    auto dots = s.find("..");
    if (dots == std::string::npos) throw mzv::ParseError("prime range must be lo..hi");
    uint64_t lo = std::stoull(s.substr(0, dots));
    uint64_t hi = std::stoull(s.substr(dots + 2));
    if (lo > hi) throw mzv::ParseError("prime range must have lo <= hi");
    return {lo, hi};
}

int parse_tol_pow10(const std::string& s) {
    if (s.empty()) return 0;
    std::string body = s;
    if (body.rfind("1e-", 0) == 0 || body.rfind("1E-", 0) == 0) body = body.substr(3);
    try {
        int v = std::stoi(body);
        if (v <= 0) throw mzv::ParseError("tolerance exponent must be positive");
        return v;
    } catch (const std::exception&) {
        throw mzv::ParseError("tolerance must look like 1e-25");
    }
}

mzv::Relation build_relation(const std::string& which, const std::string& k_text, int ones,
                             int s, int t, int l, int u, bool finite_flavor) {
    using namespace mzv;
    if (which == "sum-formula") {
        int k = std::stoi(k_text);
        return sum_formula_sides(k, u);
    }
    Index k = read_index(k_text, ones);
    if (which == "grsf") return grsf_sides(k, t);
    if (which == "grsf-ones") return grsf_ones_sides(k, s, t);
    if (which == "ohno") return ohno_sides(k, l, finite_flavor ? Flavor::Finite : Flavor::Real);
    if (which == "grsf-finite") return grsf_finite_sides(k, t);
    throw InvalidParams("unknown relation '" + which + "'");
}

std::string params_str(const mzv::Relation& rel) {
    std::string out;
    for (const auto& [key, value] : rel.params) {
        if (!out.empty()) out += ";";
        out += key + "=" + value;
    }
    return out;
}

void print_relation(const mzv::Relation& rel, const std::string& format) {
    if (format == "json") {
        std::cout << mzv::to_json(rel).dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "name,params,lhs,rhs\n"
                  << rel.name << ",\"" << params_str(rel) << "\",\"" << rel.lhs.str() << "\",\""
                  << rel.rhs.str() << "\"\n";
    } else {
        std::cout << rel.name << " " << params_str(rel) << "\n"
                  << "  lhs = " << rel.lhs.str() << "\n"
                  << "  rhs = " << rel.rhs.str() << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multiple zeta value identity generator and verifier"};
    app.require_subcommand(1);
    app.fallthrough();  // global options like --format may follow the subcommand

    Options opt;
    opt.prec = default_prec();
    app.add_option("--format", opt.format, "output format: text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    // gen
    std::string gen_which, gen_k;
    int gen_s = 0, gen_t = 0, gen_l = 0, gen_u = 1;
    auto* gen = app.add_subcommand("gen", "emit both sides of an identity");
    gen->add_option("relation", gen_which, "grsf|grsf-ones|sum-formula|ohno|grsf-finite")
        ->required()
        ->check(CLI::IsMember({"grsf", "grsf-ones", "sum-formula", "ohno", "grsf-finite"}));
    gen->add_option("--k", gen_k, "index, e.g. 1,2 (or an integer for sum-formula)")->required();
    gen->add_option("--ones", opt.ones, "append {1}^N to --k");
    gen->add_option("--s", gen_s, "trailing-ones parameter");
    gen->add_option("--t", gen_t, "shift weight parameter");
    gen->add_option("--l", gen_l, "ohno shift parameter");
    gen->add_option("--u", gen_u, "sum-formula depth");
    bool gen_finite = false;
    gen->add_flag("--finite", gen_finite, "finite flavor (ohno)");

    // verify
    std::string ver_which, ver_k, ver_mode = "real";
    int ver_s = 0, ver_t = 0, ver_l = 0, ver_u = 1;
    auto* ver = app.add_subcommand("verify", "generate an identity and check it");
    ver->add_option("relation", ver_which, "grsf|grsf-ones|sum-formula|ohno|grsf-finite")
        ->required()
        ->check(CLI::IsMember({"grsf", "grsf-ones", "sum-formula", "ohno", "grsf-finite"}));
    ver->add_option("--k", ver_k)->required();
    ver->add_option("--ones", opt.ones, "append {1}^N to --k");
    ver->add_option("--s", ver_s);
    ver->add_option("--t", ver_t);
    ver->add_option("--l", ver_l);
    ver->add_option("--u", ver_u);
    ver->add_option("--mode", ver_mode, "real|finite|symbolic")
        ->check(CLI::IsMember({"real", "finite", "symbolic"}));
    ver->add_option("--prec", opt.prec, "fixed-point fractional bits (>= 64)");
    ver->add_option("--primes", opt.primes, "prime range lo..hi");
    ver->add_option("--tol", opt.tol, "tolerance, e.g. 1e-25");

    // eval
    std::string eval_index;
    bool eval_star = false;
    auto* ev = app.add_subcommand("eval", "evaluate a single zeta value");
    ev->add_option("--index", eval_index)->required();
    ev->add_option("--ones", opt.ones, "append {1}^N to --index");
    ev->add_flag("--star", eval_star, "zeta-star value");
    ev->add_option("--prec", opt.prec, "fixed-point fractional bits (>= 64)");

    // eval-p
    std::string evp_index;
    uint64_t evp_p = 0;
    auto* evp = app.add_subcommand("eval-p", "evaluate a truncated sum mod p");
    evp->add_option("--index", evp_index)->required();
    evp->add_option("--ones", opt.ones, "append {1}^N to --index");
    evp->add_option("--p", evp_p, "prime modulus")->required();
    bool evp_star = false;
    evp->add_flag("--star", evp_star, "weakly-decreasing variant");

    // dual
    std::string dual_index;
    auto* dual = app.add_subcommand("dual", "Hoffman dual of an index");
    dual->add_option("--index", dual_index)->required();
    dual->add_option("--ones", opt.ones, "append {1}^N to --index");

    // poset
    auto* poset = app.add_subcommand("poset", "2-poset operations");
    poset->require_subcommand(1);
    std::string mu_k, mu_l;
    bool mu_expand = false;
    auto* pmu = poset->add_subcommand("mu", "build mu(k,l)");
    pmu->add_option("--k", mu_k)->required();
    pmu->add_option("--l", mu_l)->required();
    pmu->add_flag("--expand", mu_expand, "also expand into a formal sum");
    std::string pexp_text;
    auto* pexp = poset->add_subcommand("expand", "expand a poset given in text form");
    pexp->add_option("--text", pexp_text, "poset as 'n; i<j,...; labels'")->required();

    // suite
    std::string suite_which;
    auto* suite = app.add_subcommand("suite", "run a verification suite");
    suite->add_option("which", suite_which, "lemma|equivalence|integral-series|all")
        ->required()
        ->check(CLI::IsMember({"lemma", "equivalence", "integral-series", "all"}));
    suite->add_option("--prec", opt.prec);
    std::string suite_primes = "2..1000";
    suite->add_option("--primes", suite_primes, "prime cap as lo..hi (hi is used)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (gen->parsed()) {
            mzv::Relation rel =
                build_relation(gen_which, gen_k, opt.ones, gen_s, gen_t, gen_l, gen_u,
                               gen_finite || gen_which == "grsf-finite");
            print_relation(rel, opt.format);
            return kExitPass;
        }

        if (ver->parsed()) {
            mzv::Relation rel =
                build_relation(ver_which, ver_k, opt.ones, ver_s, ver_t, ver_l, ver_u,
                               ver_mode == "finite" || ver_which == "grsf-finite");
            bool pass = false;
            std::string diff_or_primes;
            if (ver_mode == "symbolic") {
                pass = rel.lhs == rel.rhs;
                diff_or_primes = pass ? "" : (rel.lhs - rel.rhs).str();
                if (opt.format == "json") {
                    nlohmann::ordered_json out = mzv::to_json(rel);
                    out["mode"] = "symbolic";
                    out["verdict"] = pass ? "pass" : "fail";
                    std::cout << out.dump(2) << "\n";
                }
            } else if (ver_mode == "real") {
                mzv::RealEvaluator rev(opt.prec);
                mzv::EvalReport rep = mzv::verify_real(rel, rev, parse_tol_pow10(opt.tol));
                pass = rep.pass;
                diff_or_primes = rep.abs_diff;
                if (opt.format == "json") std::cout << mzv::to_json(rep).dump(2) << "\n";
            } else {
                auto [lo, hi] = parse_prime_range(opt.primes);
                mzv::FiniteEvaluator fev;
                mzv::FiniteReport rep = mzv::verify_finite(rel, lo, hi, fev);
                pass = rep.pass;
                for (uint64_t p : rep.failing_primes)
                    diff_or_primes += (diff_or_primes.empty() ? "" : " ") + std::to_string(p);
                if (opt.format == "json") std::cout << mzv::to_json(rep).dump(2) << "\n";
            }
            if (opt.format == "csv") {
                std::cout << "name,params,mode,verdict,max_abs_diff_or_failing_primes\n"
                          << rel.name << ",\"" << params_str(rel) << "\"," << ver_mode << ","
                          << (pass ? "pass" : "fail") << ",\"" << diff_or_primes << "\"\n";
            } else if (opt.format == "text") {
                std::cout << rel.name << " " << params_str(rel) << " [" << ver_mode
                          << "]: " << (pass ? "pass" : "FAIL");
                if (!pass && !diff_or_primes.empty()) std::cout << " (" << diff_or_primes << ")";
                std::cout << "\n";
            }
            return pass ? kExitPass : kExitFail;
        }

        if (ev->parsed()) {
            mzv::Index k = read_index(eval_index, opt.ones);
            mzv::RealEvaluator rev(opt.prec);
            mzv::BigFixed v = eval_star ? rev.mzv_star(k) : rev.mzv(k);
            int digits = opt.prec * 30100 / 100000;
            std::string bound = "2^-" + std::to_string(opt.prec - 8);
            if (opt.format == "json") {
                nlohmann::ordered_json out;
                out["index"] = k.parts();
                out["star"] = eval_star;
                out["value"] = v.to_decimal(digits);
                out["abs_error_bound"] = bound;
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << (eval_star ? "zeta*(" : "zeta(") << mzv::format_index(k)
                          << ") = " << v.to_decimal(digits) << "  (abs error <= " << bound << ")\n";
            }
            return kExitPass;
        }

        if (evp->parsed()) {
            mzv::Index k = read_index(evp_index, opt.ones);
            mzv::FiniteEvaluator fev;
            uint64_t v = evp_star ? fev.zeta_p_star(k, evp_p) : fev.zeta_p(k, evp_p);
            if (opt.format == "json") {
                nlohmann::ordered_json out;
                out["index"] = k.parts();
                out["p"] = evp_p;
                out["residue"] = v;
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << v << "\n";
            }
            return kExitPass;
        }

        if (dual->parsed()) {
            std::cout << mzv::format_index(mzv::hoffman_dual(read_index(dual_index, opt.ones)))
                      << "\n";
            return kExitPass;
        }

        if (poset->parsed()) {
            if (pmu->parsed()) {
                mzv::TwoPoset x = mzv::mu(mzv::parse_index(mu_k), mzv::parse_index(mu_l));
                std::cout << mzv::format_poset(x) << "\n";
                if (mu_expand) std::cout << mzv::expand_poset(x).str() << "\n";
            } else {
                mzv::TwoPoset x = mzv::parse_poset(pexp_text);
                std::cout << mzv::expand_poset(x).str() << "\n";
            }
            return kExitPass;
        }

        if (suite->parsed()) {
            mzv::SuiteConfig cfg;
            cfg.frac_bits = opt.prec;
            cfg.prime_max = parse_prime_range(suite_primes).second;
            auto results = mzv::run_suite(suite_which, cfg);
            bool all_pass = true;
            if (opt.format == "csv")
                std::cout << "name,params,mode,verdict,max_abs_diff_or_failing_primes\n";
            for (const auto& r : results) {
                all_pass = all_pass && r.pass;
                if (opt.format == "json") {
                    nlohmann::ordered_json out;
                    out["criterion"] = r.id;
                    out["name"] = r.name;
                    out["verdict"] = r.pass ? "pass" : "fail";
                    out["detail"] = r.detail;
                    std::cout << out.dump() << "\n";
                } else if (opt.format == "csv") {
                    std::cout << "criterion-" << r.id << ",\"" << r.name << "\",suite,"
                              << (r.pass ? "pass" : "fail") << ",\"" << r.detail << "\"\n";
                } else {
                    std::cout << "[" << (r.pass ? "PASS" : "FAIL") << "] criterion " << r.id << ": "
                              << r.name << " — " << r.detail << "\n";
                }
            }
            return all_pass ? kExitPass : kExitFail;
        }
    } catch (const mzv::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const mzv::InvalidParams& e) {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
