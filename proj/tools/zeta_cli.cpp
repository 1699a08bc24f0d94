// Command-line front end: formula evaluation, coefficient generation, table
// reproduction against embedded golden values, and the cross-formula
// verification suite. Exit codes: 0 ok, 1 usage, 2 domain, 3 precision,
// 4 table mismatch, 5 verify failure.

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "zeta/bernoulli.hpp"
#include "zeta/coefficients.hpp"
#include "zeta/errors.hpp"
#include "zeta/product_engine.hpp"
#include "zeta/reference_oracle.hpp"
#include "zeta/golden_data.hpp"

using json = nlohmann::ordered_json;
using zeta::ComplexArgument;
using zeta::EngineOptions;
using zeta::FormulaId;
using zeta::PrecisionContext;
using zeta::Real;

namespace {

struct CommonFlags {
    std::string format = "text";
    std::string threads = "auto";
    std::uint64_t block_size = zeta::kDefaultBlockSize;

    EngineOptions engine() const {
        EngineOptions opt;
        opt.block_size = block_size;
        opt.threads = threads == "auto" ? 0 : static_cast<unsigned>(std::stoul(threads));
        return opt;
    }
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--format", flags.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--threads", flags.threads, "worker threads (n or auto; never affects results)")
        ->capture_default_str();
    cmd->add_option("--block-size", flags.block_size, "primes per reduction block")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
}

Real parse_sigma(const std::string& text, mpfr_prec_t prec) {
    if (text.find('/') != std::string::npos) {
        return Real::of_rational(zeta::BigRational::from_string(text), prec);
    }
    return Real::of_string(text, prec);
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (const char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

std::string csv_line(const std::vector<std::string>& fields) {
    std::string line;
    for (size_t i = 0; i < fields.size(); ++i) {
        if (i) line += ',';
        line += csv_field(fields[i]);
    }
    return line;
}

// ---------------------------------------------------------------------------
// eval

struct EvalFlags {
    CommonFlags common;
    std::string formula;
    std::string sigma;
    std::string t = "0";
    std::string primes = "auto";
    unsigned digits = 15;
    std::uint64_t max_primes = zeta::kDefaultAutoPrimeCap;
};

int run_eval(const EvalFlags& flags) {
    const PrecisionContext ctx = PrecisionContext::for_digits(flags.digits);
    const ComplexArgument arg{parse_sigma(flags.sigma, ctx.working_precision_bits),
                              Real::of_string(flags.t, ctx.working_precision_bits)};
    const FormulaId formula = zeta::parse_formula(flags.formula);

    const auto started = std::chrono::steady_clock::now();
    zeta::ProductEvaluation eval =
        flags.primes == "auto"
            ? zeta::evaluate_auto(formula, arg, ctx, flags.max_primes, flags.common.engine())
            : zeta::evaluate(formula, arg, std::stoull(flags.primes), ctx, flags.common.engine());
    const auto elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                std::chrono::steady_clock::now() - started)
                                .count();

    // The value is printed to the digits certified by the rounding bound
    // alone (digits of the computed partial-product value), capped at the
    // request; certified_digits reports the tail-aware certification.
    const long value_digits =
        std::min<long>(flags.digits,
                       std::max<long>(1, zeta::certified_digits_from_bound(eval.rounding_bound)));
    const std::string value_str = zeta::to_decimal_string(eval.value, static_cast<int>(value_digits));
    const Real abs_bound = (eval.truncation_bound + eval.rounding_bound) * eval.value;
    const std::string pm_str = zeta::to_bound_string(abs_bound);
    const std::string trunc_str = zeta::to_bound_string(eval.truncation_bound);
    const std::string round_str = zeta::to_bound_string(eval.rounding_bound);

    if (flags.common.format == "json") {
        json out;
        out["command"] = "eval";
        out["inputs"] = {{"sigma", flags.sigma},
                         {"t", flags.t},
                         {"primes", eval.primes_used},
                         {"last_prime", eval.last_prime},
                         {"digits", flags.digits},
                         {"precision_bits", static_cast<long>(ctx.working_precision_bits)}};
        out["result"] = {{"value", value_str},
                         {"certified_digits", eval.certified_digits},
                         {"truncation_bound", trunc_str},
                         {"rounding_bound", round_str}};
        out["timing"] = {{"elapsed_ms", elapsed_ms}};
        out["provenance"] = {{"formula", zeta::formula_name(formula)},
                             {"eq_ref", zeta::formula_eq_ref(formula)}};
        std::cout << out.dump() << "\n";
    } else if (flags.common.format == "csv") {
        std::cout << "command,formula,eq_ref,sigma,t,primes,last_prime,digits,precision_bits,"
                     "value,plus_minus,certified_digits,truncation_bound,rounding_bound,elapsed_ms\n";
        std::cout << csv_line({"eval", zeta::formula_name(formula), zeta::formula_eq_ref(formula),
                               flags.sigma, flags.t, std::to_string(eval.primes_used),
                               std::to_string(eval.last_prime), std::to_string(flags.digits),
                               std::to_string(ctx.working_precision_bits), value_str, pm_str,
                               std::to_string(eval.certified_digits), trunc_str, round_str,
                               std::to_string(elapsed_ms)})
                  << "\n";
    } else {
        std::cout << "command: eval\n"
                  << "formula: " << zeta::formula_name(formula) << " (equation "
                  << zeta::formula_eq_ref(formula) << ")\n"
                  << "sigma: " << flags.sigma << "\n"
                  << "t: " << flags.t << "\n"
                  << "primes: " << eval.primes_used << " (last prime " << eval.last_prime << ")\n"
                  << "working precision: " << ctx.working_precision_bits << " bits\n"
                  << "value: " << value_str << " +/- " << pm_str << "\n"
                  << "certified digits: " << eval.certified_digits << "\n"
                  << "truncation bound: " << trunc_str << "\n"
                  << "rounding bound: " << round_str << "\n"
                  << "elapsed: " << elapsed_ms << " ms\n";
    }
    return 0;
}

// ---------------------------------------------------------------------------
// appendix-a

int run_appendix_a(const CommonFlags& common) {
    const auto rows = zeta::appendix_a_table();
    if (common.format == "json") {
        json out;
        out["command"] = "appendix-a";
        out["rows"] = json::array();
        for (const auto& r : rows) {
            out["rows"].push_back({{"k", r.k},
                                   {"pi_power", r.pi_power},
                                   {"radicand",
                                    {{"num", r.radicand.numerator().str()},
                                     {"den", r.radicand.denominator().str()}}}});
        }
        std::cout << out.dump() << "\n";
    } else if (common.format == "csv") {
        std::cout << "k,pi_power,radicand_num,radicand_den\n";
        for (const auto& r : rows) {
            std::cout << csv_line({std::to_string(r.k), std::to_string(r.pi_power),
                                   r.radicand.numerator().str(), r.radicand.denominator().str()})
                      << "\n";
        }
    } else {
        std::cout << "k   pi_power  radicand\n";
        for (const auto& r : rows) {
            std::printf("%-3u %-9u %s\n", r.k, r.pi_power, r.radicand.str().c_str());
        }
    }
    return 0;
}

// ---------------------------------------------------------------------------
// table1

struct TableRow {
    std::string k;
    std::string reference;
    std::string product;
    std::string formula;
    std::string convention;
    bool match = false;
    std::string golden_reference;
    std::string golden_product;
};

struct Table1Flags {
    CommonFlags common;
    std::uint64_t primes = 1000;
    unsigned digits = 15;
};

// Matches a rendered cell against its golden string: round-to-nearest first,
// then truncation, then a numeric 1-ulp-in-the-last-place fallback.
std::string match_cell(const Real& value, const std::string& golden, unsigned digits,
                       std::string& rendered) {
    const std::string rounded = zeta::to_decimal_string(value, static_cast<int>(digits));
    if (rounded == golden) {
        rendered = rounded;
        return "round";
    }
    const std::string truncated = zeta::to_decimal_string(value, static_cast<int>(digits), true);
    if (truncated == golden) {
        rendered = truncated;
        return "truncate";
    }
    rendered = rounded;
    const Real g = Real::of_string(golden, value.precision());
    const Real ulp = Real::of_ui(10, value.precision())
                         .pow_si(g.floor_log10() - static_cast<long>(digits) + 1);
    if ((value - g).abs() <= ulp) return "numeric";
    return "mismatch";
}

int run_table1(const Table1Flags& flags) {
    const json golden = json::parse(zeta::golden::kGoldenValuesJson);
    const PrecisionContext ctx = PrecisionContext::for_digits(flags.digits);
    const PrecisionContext ref_ctx = PrecisionContext::for_digits(flags.digits + 4);
    const EngineOptions engine = flags.common.engine();

    std::vector<TableRow> rows;
    bool all_match = true;
    for (const auto& cell : golden.at("table1")) {
        TableRow row;
        row.k = cell.at("k").get<std::string>();
        row.golden_reference = cell.at("reference").get<std::string>();
        row.golden_product = cell.at("product").get<std::string>();

        const bool half = row.k == "1.5";
        const FormulaId formula = half ? FormulaId::HalfIntegerMain : FormulaId::IntegerSqrt;
        row.formula = zeta::formula_name(formula);
        const ComplexArgument arg =
            ComplexArgument::real_only(parse_sigma(half ? "3/2" : row.k,
                                                   ctx.working_precision_bits));

        const auto ref = zeta::reference_zeta(arg, ref_ctx);
        const auto eval = zeta::evaluate(formula, arg, flags.primes, ctx, engine);

        const std::string ref_convention =
            match_cell(ref.value.re, row.golden_reference, flags.digits, row.reference);
        const std::string prod_convention =
            match_cell(eval.value, row.golden_product, flags.digits, row.product);
        row.convention = prod_convention;
        row.match = ref_convention != "mismatch" && prod_convention != "mismatch";
        if (!row.match) all_match = false;
        rows.push_back(std::move(row));
    }

    if (flags.common.format == "json") {
        json out;
        out["command"] = "table1";
        out["inputs"] = {{"primes", flags.primes}, {"digits", flags.digits}};
        out["rows"] = json::array();
        for (const auto& r : rows) {
            out["rows"].push_back({{"k", r.k},
                                   {"reference", r.reference},
                                   {"product", r.product},
                                   {"formula", r.formula},
                                   {"convention", r.convention},
                                   {"match", r.match}});
        }
        out["all_match"] = all_match;
        std::cout << out.dump() << "\n";
    } else if (flags.common.format == "csv") {
        std::cout << "k,reference,product,formula,convention,match\n";
        for (const auto& r : rows) {
            std::cout << csv_line({r.k, r.reference, r.product, r.formula, r.convention,
                                   r.match ? "true" : "false"})
                      << "\n";
        }
    } else {
        std::printf("%-5s %-18s %-18s %-18s %s\n", "k", "reference", "product", "formula",
                    "match");
        for (const auto& r : rows) {
            std::printf("%-5s %-18s %-18s %-18s %s\n", r.k.c_str(), r.reference.c_str(),
                        r.product.c_str(), r.formula.c_str(), r.match ? "yes" : "NO");
        }
    }

    if (!all_match) {
        for (const auto& r : rows) {
            if (r.match) continue;
            std::cerr << "cell mismatch at k=" << r.k << ": reference " << r.reference
                      << " (golden " << r.golden_reference << "), product " << r.product
                      << " (golden " << r.golden_product << ")\n";
        }
        return 4;
    }
    return 0;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyFlags {
    CommonFlags common;
    std::string level = "quick";
};

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
};

class VerifySuite {
public:
    VerifySuite(bool full, const EngineOptions& engine)
        : full_(full), engine_(engine), ctx_(PrecisionContext::for_digits(15)) {}

    std::vector<CheckResult> run() {
        results_.clear();
        check_sqrt_vs_rationalized();
        check_magnitude_t0_reduction();
        check_cross_family();
        check_ratio_identity();
        check_von_staudt_clausen();
        check_oracle_even_zeta();
        check_reduction_determinism();
        check_half_integer_alt_identity();
        return results_;
    }

private:
    ComplexArgument int_arg(long k) const {
        return ComplexArgument::real_only(Real::of_si(k, ctx_.working_precision_bits));
    }

    void record(const std::string& name, bool pass, const std::string& detail = "") {
        results_.push_back({name, pass, detail});
    }

    void check_sqrt_vs_rationalized() {
        std::vector<std::uint64_t> counts = full_ ? std::vector<std::uint64_t>{10, 1000}
                                                  : std::vector<std::uint64_t>{10};
        bool ok = true;
        std::string detail;
        for (std::uint64_t n : counts) {
            for (long k = 2; k <= 11; ++k) {
                const auto a = zeta::evaluate(FormulaId::IntegerSqrt, int_arg(k), n, ctx_, engine_);
                const auto b =
                    zeta::evaluate(FormulaId::IntegerRationalized, int_arg(k), n, ctx_, engine_);
                const Real allow = (a.rounding_bound + b.rounding_bound) * a.value;
                if (!((a.value - b.value).abs() < allow)) {
                    ok = false;
                    detail = "k=" + std::to_string(k) + " n=" + std::to_string(n);
                }
            }
        }
        record("integer-sqrt equals integer-rationalized (k=2..11)", ok, detail);
    }

    void check_magnitude_t0_reduction() {
        std::vector<std::uint64_t> counts = full_ ? std::vector<std::uint64_t>{10, 100}
                                                  : std::vector<std::uint64_t>{10};
        bool ok = true;
        std::string detail;
        for (std::uint64_t n : counts) {
            for (long k : {2L, 3L, 4L}) {
                const auto a =
                    zeta::evaluate(FormulaId::MagnitudeMain, int_arg(k), n, ctx_, engine_);
                const auto b = zeta::evaluate(FormulaId::IntegerSqrt, int_arg(k), n, ctx_, engine_);
                const Real allow = (a.rounding_bound + b.rounding_bound) * a.value;
                if (!((a.value - b.value).abs() < allow)) {
                    ok = false;
                    detail = "sigma=" + std::to_string(k) + " n=" + std::to_string(n);
                }
            }
        }
        record("magnitude formula at t=0 squares to the real-argument identity", ok, detail);
    }

    void check_cross_family() {
        const std::uint64_t n = full_ ? 100000 : 1000;
        bool ok = true;
        std::string detail;
        for (long k = 2; k <= 11; ++k) {
            const auto a = zeta::evaluate(FormulaId::IntegerSqrt, int_arg(k), n, ctx_, engine_);
            const auto b = zeta::evaluate(FormulaId::AltProduct, int_arg(k), n, ctx_, engine_);
            const Real allow =
                (a.truncation_bound + a.rounding_bound + b.truncation_bound + b.rounding_bound) *
                a.value;
            if (!((a.value - b.value).abs() < allow)) {
                ok = false;
                detail = "k=" + std::to_string(k);
            }
        }
        record("square-root and alternate families agree at n=" + std::to_string(n), ok, detail);
    }

    void check_ratio_identity() {
        const std::uint64_t n = full_ ? 100000 : 10000;
        const std::uint64_t last = zeta::first_n_primes(n).primes.back();
        bool ok = true;
        std::string detail;
        for (const char* sigma : {"1.5", "2", "3"}) {
            const Real s = Real::of_string(sigma, ctx_.working_precision_bits);
            const Real residual = zeta::ratio_identity_residual(s, n, ctx_, engine_);
            const Real lhs = zeta::reference_zeta(
                                 ComplexArgument::real_only(s * 2ul), ctx_)
                                 .value.re /
                             zeta::reference_zeta(ComplexArgument::real_only(s), ctx_).value.re;
            const Real bound =
                zeta::tail_bound(FormulaId::RatioIdentity, ComplexArgument::real_only(s), last,
                                 ctx_) *
                lhs;
            if (!(residual < bound)) {
                ok = false;
                detail = std::string("sigma=") + sigma;
            }
        }
        record("ratio identity residual below its tail bound (sigma=1.5,2,3)", ok, detail);
    }

    void check_von_staudt_clausen() {
        const unsigned max2n = full_ ? 80 : 40;
        bool ok = true;
        std::string detail;
        for (unsigned n = 1; 2 * n <= max2n; ++n) {
            zeta::BigInt expected(1);
            for (std::uint64_t p = 2; p <= 2 * n + 1; ++p) {
                if (zeta::is_prime_u64(p) && (2 * n) % (p - 1) == 0) {
                    expected *= zeta::BigInt(static_cast<long>(p));
                }
            }
            if (zeta::bernoulli(2 * n).denominator() != expected) {
                ok = false;
                detail = "2n=" + std::to_string(2 * n);
            }
        }
        record("Bernoulli denominators satisfy von Staudt-Clausen (2n<=" +
                   std::to_string(max2n) + ")",
               ok, detail);
    }

    void check_oracle_even_zeta() {
        const unsigned maxk = full_ ? 10 : 5;
        const Real pi = Real::pi(ctx_.working_precision_bits);
        const Real cushion = Real::ui_shifted(
            16, -static_cast<long>(ctx_.working_precision_bits) + 4, ctx_.working_precision_bits);
        bool ok = true;
        std::string detail;
        for (unsigned k = 1; k <= maxk; ++k) {
            const auto r = zeta::reference_zeta(int_arg(2 * static_cast<long>(k)), ctx_);
            const Real exact =
                Real::of_rational(zeta::zeta_even_rational(k), ctx_.working_precision_bits) *
                pi.pow_si(2 * static_cast<long>(k));
            if (!((r.value.re - exact).abs() < r.error_bound + cushion * exact)) {
                ok = false;
                detail = "2k=" + std::to_string(2 * k);
            }
        }
        record("oracle matches exact even-order values (2k<=" + std::to_string(2 * maxk) + ")",
               ok, detail);
    }

    void check_reduction_determinism() {
        const std::vector<unsigned> thread_counts =
            full_ ? std::vector<unsigned>{1, 2, 8} : std::vector<unsigned>{1, 2};
        const std::uint64_t n = 3 * zeta::kDefaultBlockSize;
        EngineOptions base = engine_;
        base.threads = thread_counts.front();
        const auto first = zeta::evaluate(FormulaId::IntegerSqrt, int_arg(3), n, ctx_, base);
        bool ok = true;
        for (unsigned t : thread_counts) {
            EngineOptions opt = engine_;
            opt.threads = t;
            const auto e = zeta::evaluate(FormulaId::IntegerSqrt, int_arg(3), n, ctx_, opt);
            if (!(e.value == first.value)) ok = false;
        }
        record("parallel reduction is bit-deterministic across thread counts", ok);
    }

    void check_half_integer_alt_identity() {
        const std::uint64_t n = full_ ? 20000 : 2000;
        const ComplexArgument arg =
            ComplexArgument::real_only(Real::of_string("1.5", ctx_.working_precision_bits));
        const auto e = zeta::evaluate(FormulaId::HalfIntegerAlt, arg, n, ctx_, engine_);
        const auto z3 = zeta::reference_zeta(int_arg(3), ctx_);
        const mpfr_prec_t wp = ctx_.working_precision_bits;
        const Real partial = zeta::parallel_reduce(
            zeta::prime_blocks(n, engine_.block_size),
            [&](std::uint64_t p, mpfr_ptr out) {
                const Real ps = Real::of_ui(p, wp).sqrt() * p;
                const Real ratio = (ps + Real::of_ui(1, wp)) / (ps - Real::of_ui(1, wp));
                mpfr_sqrt(out, ratio.raw(), MPFR_RNDN);
            },
            ctx_, engine_.threads);
        const Real rhs = z3.value.re.sqrt() * partial;
        const std::uint64_t last = zeta::first_n_primes(n).primes.back();
        const Real tail_rhs = zeta::tail_bound(FormulaId::MagnitudeMain, arg, last, ctx_);
        const Real allow =
            (e.truncation_bound + e.rounding_bound) * e.value + tail_rhs * rhs + z3.error_bound;
        record("alternate half-integer product equals the sqrt(zeta(3)) form",
               (e.value - rhs).abs() < allow);
    }

    bool full_;
    EngineOptions engine_;
    PrecisionContext ctx_;
    std::vector<CheckResult> results_;
};

int run_verify(const VerifyFlags& flags) {
    VerifySuite suite(flags.level == "full", flags.common.engine());
    const auto results = suite.run();
    bool all = true;
    if (flags.common.format == "json") {
        json out;
        out["command"] = "verify";
        out["level"] = flags.level;
        out["checks"] = json::array();
        for (const auto& r : results) {
            all = all && r.pass;
            out["checks"].push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        }
        out["all_pass"] = all;
        std::cout << out.dump() << "\n";
    } else {
        for (const auto& r : results) {
            all = all && r.pass;
            std::cout << (r.pass ? "PASS " : "FAIL ") << r.name;
            if (!r.pass && !r.detail.empty()) std::cout << " (" << r.detail << ")";
            std::cout << "\n";
        }
        std::cout << (all ? "all checks passed" : "some checks FAILED") << "\n";
    }
    return all ? 0 : 5;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"prime-product evaluation of the Riemann zeta function"};
    app.require_subcommand(1);

    EvalFlags eval_flags;
    CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate one product formula");
    eval_cmd->add_option("--formula", eval_flags.formula, "formula id (e.g. integer-sqrt)")
        ->required();
    eval_cmd->add_option("--sigma", eval_flags.sigma, "real part (integer, rational a/b, or decimal)")
        ->required();
    eval_cmd->add_option("--t", eval_flags.t, "imaginary part")->capture_default_str();
    eval_cmd->add_option("--primes", eval_flags.primes, "prime count or 'auto'")
        ->capture_default_str();
    eval_cmd->add_option("--digits", eval_flags.digits, "target decimal digits")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    eval_cmd->add_option("--max-primes", eval_flags.max_primes, "prime cap for auto mode")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_common(eval_cmd, eval_flags.common);

    CommonFlags appendix_flags;
    CLI::App* appendix_cmd =
        app.add_subcommand("appendix-a", "exact integer-formula coefficients for k=2..11");
    add_common(appendix_cmd, appendix_flags);

    Table1Flags table_flags;
    CLI::App* table_cmd =
        app.add_subcommand("table1", "reproduce the published 15-digit evaluation table");
    table_cmd->add_option("--primes", table_flags.primes, "prime count per product")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    table_cmd->add_option("--digits", table_flags.digits, "published digit count")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_common(table_cmd, table_flags.common);

    VerifyFlags verify_flags;
    CLI::App* verify_cmd = app.add_subcommand("verify", "cross-formula and oracle property suite");
    verify_cmd->add_option("--level", verify_flags.level, "quick or full")
        ->check(CLI::IsMember({"quick", "full"}))
        ->capture_default_str();
    add_common(verify_cmd, verify_flags.common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n" << app.help() << std::flush;
        return 1;
    }

    try {
        if (app.got_subcommand(eval_cmd)) return run_eval(eval_flags);
        if (app.got_subcommand(appendix_cmd)) return run_appendix_a(appendix_flags);
        if (app.got_subcommand(table_cmd)) return run_table1(table_flags);
        if (app.got_subcommand(verify_cmd)) return run_verify(verify_flags);
    } catch (const zeta::DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const zeta::ResourceLimitError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 2;
    } catch (const zeta::PrecisionError& e) {
        std::cerr << "precision error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
