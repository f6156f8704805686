#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kseg/core.hpp"
#include "kseg/idempotent.hpp"
#include "kseg/spectral.hpp"
#include "kseg/structure_maps.hpp"
#include "kseg/textio.hpp"
#include "kseg/verify.hpp"

using namespace kseg;

namespace {

Signature parse_sig(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw CLI::ValidationError("--sig", "expected P,Q");
    try {
        return Signature(std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1)));
    } catch (const std::exception& e) {
        throw CLI::ValidationError("--sig", e.what());
    }
}

ConjugationMask parse_mask(const std::string& text, const Signature& sig) {
    ConjugationMask mask = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find(',', pos);
        if (next == std::string::npos)
            next = text.size();
        const int idx = std::stoi(text.substr(pos, next - pos));
        if (idx < 1 || idx > sig.n())
            throw IndexOutOfRange("conjugation index " + std::to_string(idx) +
                                  " out of range for " + sig.str());
        mask |= ConjugationMask{1} << (idx - 1);
        pos = next + 1;
    }
    return mask;
}

Element load_json_element(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw SchemaError("cannot open JSON file '" + path + "'");
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError("invalid JSON in '" + path + "': " + e.what());
    }
    return from_json(doc);
}

// Element operands: positional expressions first, then --json files.
std::vector<Element> gather_elements(const std::vector<std::string>& exprs,
                                     const std::vector<std::string>& json_paths,
                                     const Signature& sig, std::size_t expected) {
    std::vector<Element> out;
    for (const std::string& text : exprs)
        out.push_back(parse_element(text, sig));
    for (const std::string& path : json_paths) {
        Element e = load_json_element(path);
        if (!(e.sig() == sig))
            throw SignatureMismatch("JSON element in '" + path + "' lives in " +
                                    e.sig().str() + ", expected " + sig.str());
        out.push_back(std::move(e));
    }
    if (out.size() != expected)
        throw CLI::ValidationError("elements", "expected " + std::to_string(expected) +
                                                   " element operand(s), got " +
                                                   std::to_string(out.size()));
    return out;
}

void emit_element(const Element& u, bool json_out) {
    if (json_out)
        std::cout << to_json(u).dump() << "\n";
    else
        std::cout << print_element(u) << "\n";
}

std::uint64_t resolve_seed(std::optional<std::uint64_t> seed) {
    if (seed)
        return *seed;
    if (const char* env = std::getenv("KSEG_SEED"))
        return std::strtoull(env, nullptr, 10);
    return 0;
}

int run_bench(int n_min, int n_max, int reps, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::cout << "n,strategy,mean_ns,ops_count,speedup\n";
    for (int n = n_min; n <= n_max; ++n) {
        const Signature sig(n, 0);
        const Element u = random_element(sig, rng);
        const Element v = random_element(sig, rng);
        auto time_median = [&](auto&& fn) {
            fn(); // warm-up
            std::vector<double> times(reps);
            for (int r = 0; r < reps; ++r) {
                const auto t0 = std::chrono::steady_clock::now();
                fn();
                const auto t1 = std::chrono::steady_clock::now();
                times[r] = std::chrono::duration<double, std::nano>(t1 - t0).count();
            }
            std::nth_element(times.begin(), times.begin() + reps / 2, times.end());
            return times[reps / 2];
        };
        const double naive_ns = time_median([&] { (void)mul_naive(u, v); });
        reset_spectral_op_count();
        (void)mul_fast(u, v);
        const std::uint64_t fast_ops = spectral_op_count();
        const double fast_ns = time_median([&] { (void)mul_fast(u, v); });
        const std::uint64_t naive_ops = sig.dim() * sig.dim();
        std::printf("%d,naive,%.0f,%llu,1.00\n", n, naive_ns,
                    static_cast<unsigned long long>(naive_ops));
        std::printf("%d,fast,%.0f,%llu,%.2f\n", n, fast_ns,
                    static_cast<unsigned long long>(fast_ops), naive_ns / fast_ns);
    }
    return 0;
}

int run_verify(int n_max, std::uint64_t seed) {
    VerifyOptions opt;
    opt.n_max = n_max;
    opt.seed = seed;
    bool all_ok = true;
    for (const CheckResult& r : run_verification(opt)) {
        std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.label << "\n";
        all_ok = all_ok && r.passed;
    }
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Commutative Clifford-analogue algebra K(p,q): arithmetic, "
                 "spectra, inversion, idempotents"};
    app.require_subcommand(1);

    std::string sig_text;
    std::string sig2_text;
    std::vector<std::string> exprs;
    std::vector<std::string> json_paths;
    std::string mask_text;
    std::string strategy = "fast";
    int grade_k = 0;
    double tol = 0.0;
    bool json_out = false;
    int n_min = 4, n_max = 12, reps = 20, verify_n_max = 5;
    std::optional<std::uint64_t> seed;

    auto add_common = [&](CLI::App* cmd, std::size_t positional_cap) {
        cmd->add_option("--sig", sig_text, "signature P,Q")->required();
        if (positional_cap > 0) {
            cmd->add_option("elements", exprs, "element expression strings")
                ->expected(0, static_cast<int>(positional_cap));
            cmd->add_option("--json", json_paths, "element JSON document paths");
        }
        cmd->add_flag("--json-out", json_out, "emit results as JSON documents");
        return cmd;
    };

    auto* mul = add_common(app.add_subcommand("mul", "multiply two elements"), 2);
    mul->add_option("--strategy", strategy, "naive|fast")
        ->check(CLI::IsMember({"naive", "fast"}));
    auto* addc = add_common(app.add_subcommand("add", "add two elements"), 2);
    auto* conj = add_common(app.add_subcommand("conj", "apply a superposed conjugation"), 1);
    conj->add_option("--mask", mask_text, "comma-separated generator indices")->required();
    auto* gradec = add_common(app.add_subcommand("grade", "project onto one grade"), 1);
    gradec->add_option("-k,--grade", grade_k, "grade to keep")->required();
    auto* spectrum =
        add_common(app.add_subcommand("spectrum", "direct-sum coordinates"), 1);
    auto* inv = add_common(app.add_subcommand("inv", "multiplicative inverse"), 1);
    inv->add_option("--tol", tol, "singularity tolerance (0 = scale-relative default)");
    spectrum->add_option("--tol", tol, "unused; accepted for symmetry");
    auto* canon =
        add_common(app.add_subcommand("canon", "image in the canonical class K(0,n)"), 1);
    auto* idem = add_common(app.add_subcommand("idempotents", "list all idempotents"), 0);

    auto* tensor = app.add_subcommand("tensor", "tensor-product embedding");
    tensor->add_option("--sig", sig_text, "first factor signature P,Q")->required();
    tensor->add_option("--sig2", sig2_text, "second factor signature P,Q")->required();
    tensor->add_option("elements", exprs, "two element expressions")->expected(0, 2);
    tensor->add_option("--json", json_paths, "element JSON document paths");
    tensor->add_flag("--json-out", json_out, "emit results as JSON documents");

    auto* verify = app.add_subcommand("verify", "run the self-verification suite");
    verify->add_option("--n-max", verify_n_max, "largest generator count");
    verify->add_option("--seed", seed, "random seed (fallback: KSEG_SEED)");

    auto* bench = app.add_subcommand("bench", "naive-vs-fast multiplication benchmark");
    bench->add_option("--n-min", n_min, "smallest generator count");
    bench->add_option("--n-max", n_max, "largest generator count");
    bench->add_option("--reps", reps, "timed repetitions per cell")->check(CLI::PositiveNumber);
    bench->add_option("--seed", seed, "random seed (fallback: KSEG_SEED)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e); // --help and friends
        app.exit(e);
        return 2;
    }

    try {
        if (*verify)
            return run_verify(verify_n_max, resolve_seed(seed));
        if (*bench)
            return run_bench(n_min, n_max, reps, resolve_seed(seed));

        if (*tensor) {
            const Signature s1 = parse_sig(sig_text);
            const Signature s2 = parse_sig(sig2_text);
            std::vector<Element> ops;
            if (exprs.size() >= 1)
                ops.push_back(parse_element(exprs[0], s1));
            if (exprs.size() >= 2)
                ops.push_back(parse_element(exprs[1], s2));
            for (const std::string& path : json_paths)
                ops.push_back(load_json_element(path));
            if (ops.size() != 2)
                throw CLI::ValidationError("elements", "tensor needs two operands");
            emit_element(tensor_embed(ops[0], ops[1]), json_out);
            return 0;
        }

        const Signature sig = parse_sig(sig_text);
        if (*mul) {
            const auto ops = gather_elements(exprs, json_paths, sig, 2);
            emit_element(strategy == "naive" ? mul_naive(ops[0], ops[1])
                                             : mul_fast(ops[0], ops[1]),
                         json_out);
        } else if (*addc) {
            const auto ops = gather_elements(exprs, json_paths, sig, 2);
            emit_element(add(ops[0], ops[1]), json_out);
        } else if (*conj) {
            const auto ops = gather_elements(exprs, json_paths, sig, 1);
            emit_element(conjugate(ops[0], parse_mask(mask_text, sig)), json_out);
        } else if (*gradec) {
            const auto ops = gather_elements(exprs, json_paths, sig, 1);
            emit_element(grade_project(ops[0], grade_k), json_out);
        } else if (*spectrum) {
            const auto ops = gather_elements(exprs, json_paths, sig, 1);
            const SpectrumVector s = forward(ops[0]);
            if (json_out) {
                nlohmann::json doc;
                doc["kind"] = s.kind == SpectrumKind::Real ? "real" : "complex";
                doc["sig"] = {sig.p, sig.q};
                doc["re"] = s.re;
                if (s.kind == SpectrumKind::Complex)
                    doc["im"] = s.im;
                std::cout << doc.dump() << "\n";
            } else {
                for (std::size_t i = 0; i < s.size(); ++i) {
                    if (s.kind == SpectrumKind::Real)
                        std::printf("%zu %.17g\n", i, s.re[i]);
                    else
                        std::printf("%zu %.17g %.17g\n", i, s.re[i], s.im[i]);
                }
            }
        } else if (*inv) {
            const auto ops = gather_elements(exprs, json_paths, sig, 1);
            emit_element(invert(ops[0], tol), json_out);
        } else if (*canon) {
            const auto ops = gather_elements(exprs, json_paths, sig, 1);
            emit_element(canonicalize(ops[0]), json_out);
        } else if (*idem) {
            for (const Element& u : enumerate_idempotents(sig))
                emit_element(u, json_out);
        }
        return 0;
    } catch (const SyntaxError& e) {
        std::cerr << "error: " << e.code() << ": " << e.what() << "\n";
        return 2;
    } catch (const NonCanonicalBlade& e) {
        std::cerr << "error: " << e.code() << ": " << e.what() << "\n";
        return 2;
    } catch (const IndexOutOfRange& e) {
        std::cerr << "error: " << e.code() << ": " << e.what() << "\n";
        return 2;
    } catch (const CLI::Error& e) {
        std::cerr << "error: USAGE: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.code() << ": " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: INTERNAL: " << e.what() << "\n";
        return 1;
    }
}
