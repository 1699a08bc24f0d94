// Acceptance suite: runs each published-value reproduction criterion at its
// stated tolerance and prints one PASS/FAIL line per criterion. Exits 0 only
// if every criterion passes.

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "zeta/coefficients.hpp"
#include "zeta/errors.hpp"
#include "zeta/product_engine.hpp"
#include "zeta/reference_oracle.hpp"
#include "zeta/golden_data.hpp"

using json = nlohmann::ordered_json;
using zeta::ComplexArgument;
using zeta::FormulaId;
using zeta::PrecisionContext;
using zeta::Real;

namespace {

int g_failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

void report(int criterion, const std::string& name, bool pass, long elapsed_ms,
            const std::string& detail = "") {
    if (!pass) ++g_failures;
    std::printf("%s criterion %d: %s (%ld ms)%s%s\n", pass ? "PASS" : "FAIL", criterion,
                name.c_str(), elapsed_ms, detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
}

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(ZETA_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return result;
    std::array<char, 4096> buf{};
    size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) result.output.append(buf.data(), got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

// |value - golden decimal string| <= 1 unit in the golden's last place
bool within_one_ulp_of(const Real& value, const std::string& golden) {
    int digits = 0;
    for (const char c : golden) {
        if (c >= '0' && c <= '9') ++digits;
    }
    const Real g = Real::of_string(golden, value.precision());
    const Real ulp = Real::of_ui(10, value.precision()).pow_si(g.floor_log10() - digits + 1);
    return (value - g).abs() <= ulp;
}

// 1. Exact reproduction of the ten integer-formula radicands.
void criterion_1(const json& golden) {
    Timer timer;
    bool pass = true;
    std::string detail;
    const auto r = run_cli("appendix-a --format json");
    if (r.exit_code != 0) {
        pass = false;
        detail = "CLI exited " + std::to_string(r.exit_code);
    } else {
        const json rows = json::parse(r.output).at("rows");
        const json& expected = golden.at("coefficient_table");
        pass = rows.size() == 10;
        for (const auto& row : rows) {
            const std::string got = row.at("radicand").at("num").get<std::string>() + "/" +
                                    row.at("radicand").at("den").get<std::string>();
            const std::string want =
                expected.at(std::to_string(row.at("k").get<unsigned>())).get<std::string>();
            if (got != want) {
                pass = false;
                detail = "k=" + row.at("k").dump() + " got " + got;
            }
        }
    }
    const long ms = timer.ms();
    if (ms >= 1000) {
        pass = false;
        detail += " runtime over 1 s";
    }
    report(1, "coefficient table reproduced byte-for-byte", pass, ms, detail);
}

// 2. All 22 table cells at 1000 primes within one unit in the 15th place.
void criterion_2() {
    Timer timer;
    const auto r = run_cli("table1 --primes 1000 --digits 15 --format json");
    bool pass = r.exit_code == 0;
    std::string detail;
    if (pass) {
        const json out = json::parse(r.output);
        pass = out.at("all_match").get<bool>() && out.at("rows").size() == 11;
    } else {
        detail = "CLI exited " + std::to_string(r.exit_code);
    }
    const long ms = timer.ms();
    if (ms >= 30000) {
        pass = false;
        detail += " runtime over 30 s";
    }
    report(2, "evaluation table at 1000 primes matches all 22 cells", pass, ms, detail);
}

// 3. Worked complex magnitudes: reference certifies >= 13/13/12 digits and
// matches the published strings; the capped auto-primes product agrees with
// the reference within combined bounds.
void criterion_3(const json& golden) {
    struct Case {
        const char* sigma;
        long min_certified;
    };
    const Case cases[] = {{"2", 13}, {"3", 13}, {"3/2", 12}};
    const PrecisionContext ref_ctx = PrecisionContext::for_digits(16);
    const PrecisionContext prod_ctx = PrecisionContext::for_digits(14);

    for (size_t i = 0; i < 3; ++i) {
        Timer timer;
        const json& cell = golden.at("magnitudes")[i];
        const std::string paper = cell.at("value").get<std::string>();
        const std::string sigma_text = cell.at("sigma").get<std::string>();
        bool pass = sigma_text == cases[i].sigma;
        std::string detail;

        const Real sigma = sigma_text == "3/2"
                               ? Real::of_string("1.5", ref_ctx.working_precision_bits)
                               : Real::of_string(sigma_text, ref_ctx.working_precision_bits);
        const ComplexArgument arg{sigma, Real::of_ui(1, ref_ctx.working_precision_bits)};

        const auto ref = zeta::reference_magnitude(arg, ref_ctx);
        const long ref_certified = zeta::certified_digits_from_bound(ref.error_bound);
        if (ref_certified < cases[i].min_certified) {
            pass = false;
            detail = "reference certifies only " + std::to_string(ref_certified);
        }
        if (!within_one_ulp_of(ref.value.re, paper)) {
            pass = false;
            detail = "reference disagrees with published " + paper;
        }

        const auto prod = zeta::evaluate_auto(zeta::FormulaId::MagnitudeCosh, arg, prod_ctx);
        const Real allowance =
            (prod.truncation_bound + prod.rounding_bound) * prod.value + ref.error_bound;
        if (!((prod.value - ref.value.re).abs() < allowance)) {
            pass = false;
            detail = "product outside combined bounds";
        }
        if (sigma_text == "3") {
            // the tail itself certifies 13+ digits here
            if (prod.certified_digits < 13 ||
                zeta::to_decimal_string(prod.value, 15) != paper) {
                pass = false;
                detail = "sigma=3 product certification";
            }
        }
        const long ms = timer.ms();
        if (ms >= 120000) {
            pass = false;
            detail += " runtime over 2 min";
        }
        report(3, std::string("|zeta(") + cases[i].sigma + "+i)| -> " + paper, pass, ms, detail);
    }
}

// 4. Constant-factor limits of the bare products.
void criterion_4(const json& golden) {
    Timer timer;
    const PrecisionContext ctx = PrecisionContext::for_digits(20);
    const mpfr_prec_t wp = ctx.working_precision_bits;
    bool pass = true;
    std::string detail;

    // k=2 at 1e6 primes against the exact limit sqrt(105)/6
    const ComplexArgument k2 = ComplexArgument::real_only(Real::of_ui(2, wp));
    const Real bare2 = zeta::bare_product(FormulaId::IntegerSqrt, k2, 1000000, ctx);
    const Real limit2 = Real::of_ui(105, wp).sqrt() / 6ul;
    const std::uint64_t p_1m = zeta::first_n_primes(1000000).primes.back();
    const Real bound2 = zeta::tail_bound(FormulaId::IntegerSqrt, k2, p_1m, ctx) * limit2;
    if (!((bare2 - limit2).abs() < bound2)) {
        pass = false;
        detail = "k=2 limit outside tail bound";
    }

    // k=3 against the published constant at the publication's own truncation
    const ComplexArgument k3 = ComplexArgument::real_only(Real::of_ui(3, wp));
    const Real bare3 = zeta::bare_product(FormulaId::IntegerSqrt, k3, 1000, ctx);
    const Real published =
        Real::of_string(golden.at("bare_products").at("k3_at_1000_primes").get<std::string>(), wp);
    const Real bound3 = zeta::tail_bound(FormulaId::IntegerSqrt, k3, 7919, ctx) * published;
    if (!((bare3 - published).abs() < bound3)) {
        pass = false;
        detail = "k=3 published constant outside tail bound";
    }

    // and the full k=3 product converges to the reference value
    const auto full3 = zeta::evaluate(FormulaId::IntegerSqrt, k3, 1000000, ctx);
    const auto ref3 = zeta::reference_zeta(k3, ctx);
    const Real allow3 =
        (full3.truncation_bound + full3.rounding_bound) * full3.value + ref3.error_bound;
    if (!((full3.value - ref3.value.re).abs() < allow3)) {
        pass = false;
        detail = "k=3 product at 1e6 primes disagrees with reference";
    }

    const long ms = timer.ms();
    if (ms >= 300000) {
        pass = false;
        detail += " runtime over 5 min";
    }
    report(4, "bare-product constant factors within tail bounds", pass, ms, detail);
}

// 5. The full cross-formula property suite.
void criterion_5() {
    Timer timer;
    const auto r = run_cli("verify --level full");
    const bool pass = r.exit_code == 0 && r.output.find("FAIL") == std::string::npos &&
                      r.output.find("all checks passed") != std::string::npos;
    report(5, "full verification suite", pass, timer.ms(),
           pass ? "" : "exit " + std::to_string(r.exit_code));
}

// 6. Convergence is slower for smaller arguments, and the tail bound honestly
// covers both measured errors.
void criterion_6() {
    Timer timer;
    const PrecisionContext ctx = PrecisionContext::for_digits(18);
    const mpfr_prec_t wp = ctx.working_precision_bits;
    bool pass = true;
    std::string detail;

    const ComplexArgument half = ComplexArgument::real_only(Real::of_string("1.5", wp));
    const ComplexArgument five = ComplexArgument::real_only(Real::of_ui(5, wp));

    const auto eval_half = zeta::evaluate(FormulaId::HalfIntegerMain, half, 1000, ctx);
    const auto eval_five = zeta::evaluate(FormulaId::IntegerSqrt, five, 1000, ctx);
    const auto ref_half = zeta::reference_zeta(half, ctx);
    const auto ref_five = zeta::reference_zeta(five, ctx);

    const Real err_half = (eval_half.value - ref_half.value.re).abs();
    const Real err_five = (eval_five.value - ref_five.value.re).abs();

    if (!(err_half > err_five)) {
        pass = false;
        detail = "smaller argument did not converge slower";
    }
    if (!(err_half > Real::of_string("4e-3", wp) && err_half < Real::of_string("7e-3", wp))) {
        pass = false;
        detail = "k=1.5 error " + zeta::to_bound_string(err_half) + " not near 5.5e-3";
    }
    if (!(err_five < Real::of_string("1e-14", wp))) {
        pass = false;
        detail = "k=5 error not below 1e-14";
    }
    const Real bound_half =
        zeta::tail_bound(FormulaId::HalfIntegerMain, half, 7919, ctx) * eval_half.value;
    const Real bound_five =
        zeta::tail_bound(FormulaId::IntegerSqrt, five, 7919, ctx) * eval_five.value;
    if (!(err_half < bound_half && err_five < bound_five + ref_five.error_bound)) {
        pass = false;
        detail = "measured error exceeds tail bound";
    }
    report(6, "convergence ordering and tail-bound coverage at 1000 primes", pass, timer.ms(),
           detail);
}

}  // namespace

int main() {
    const json golden = json::parse(zeta::golden::kGoldenValuesJson);
    criterion_1(golden);
    criterion_2();
    criterion_3(golden);
    criterion_4(golden);
    criterion_5();
    criterion_6();
    if (g_failures > 0) {
        std::printf("%d criterion check(s) FAILED\n", g_failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
