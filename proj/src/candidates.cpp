#include "gencase/candidates.hpp"

#include <bit>
#include <cmath>
#include <memory>

#include "gencase/errors.hpp"

namespace gencase {
namespace candidates {

using harness::CandidateFunction;
using harness::InverterContext;
using harness::InverterKind;
using harness::InverterProgram;
using harness::StepMeter;

namespace {

uint32_t ceil_log2(uint32_t n) {
    uint32_t b = 0;
    while ((uint32_t{1} << b) < n) ++b;
    return b;
}

/// Saturating product for declared step bounds.
uint64_t sat_mul(uint64_t a, uint64_t b) {
    unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
    return p > StepMeter::kUnlimited / 2 ? StepMeter::kUnlimited : static_cast<uint64_t>(p);
}

constexpr uint64_t kScrambleMul1 = 0x9E3779B97F4A7C15ULL | 1;
constexpr uint64_t kScrambleMul2 = 0xC2B2AE3D27D4EB4FULL | 1;
constexpr uint64_t kScrambleAdd1 = 0x165667B19E3779F9ULL;
constexpr uint64_t kScrambleAdd2 = 0x27D4EB2F165667C5ULL;

/// Fixed keyed permutation of n-bit values: odd-multiplier affine maps mod
/// 2^n interleaved with xorshift-right rounds, each invertible, so the
/// composition is a bijection. Only the step-count asymmetry matters, not
/// any cryptographic strength.
uint64_t scramble_value(uint64_t v, uint32_t n) {
    const uint64_t mask = n >= 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
    const uint32_t s1 = std::max<uint32_t>(1, n / 2);
    const uint32_t s2 = std::max<uint32_t>(1, n / 3);
    v = (v * kScrambleMul1 + kScrambleAdd1) & mask;
    v ^= v >> s1;
    v = (v * kScrambleMul2 + kScrambleAdd2) & mask;
    v ^= v >> s2;
    v = (v * kScrambleMul1 + kScrambleAdd2) & mask;
    return v & mask;
}

} // namespace

CandidateFunction make_identity() {
    return CandidateFunction(
        "identity", [](uint32_t) { return true; }, [](uint32_t n) { return n; },
        [](uint32_t n) { return uint64_t{n} + 2; },
        [](const BitString& x, StepMeter& meter) {
            meter.tick(x.size() + 1);
            return x;
        });
}

CandidateFunction make_const_zero() {
    return CandidateFunction(
        "const0", [](uint32_t) { return true; }, [](uint32_t n) { return n; },
        [](uint32_t n) { return uint64_t{n} + 2; },
        [](const BitString& x, StepMeter& meter) {
            meter.tick(x.size() + 1);
            return BitString::zeros(x.size());
        });
}

CandidateFunction make_mult() {
    return CandidateFunction(
        "mult", [](uint32_t n) { return n >= 2 && n <= 62 && n % 2 == 0; },
        [](uint32_t n) { return n + 2; }, [](uint32_t n) { return 2 * uint64_t{n} + 16; },
        [](const BitString& x, StepMeter& meter) {
            const uint32_t n = x.size();
            const uint32_t h = n / 2;
            meter.tick(n + 4);
            const uint64_t p = (uint64_t{1} << h) | x.slice(0, h).to_index();
            const uint64_t q = (uint64_t{1} << h) | x.slice(h, h).to_index();
            return BitString::from_index(p * q, n + 2);
        });
}

CandidateFunction make_subset_sum(uint32_t weight_count) {
    if (weight_count < 1 || weight_count > 20)
        throw ConfigError("subset_sum: weight count must be in [1, 20]");
    const uint32_t w = weight_count;
    const uint32_t sum_extra = std::bit_width(w);  // sum of w b-bit values < 2^(b + bit_width(w))
    auto valid = [w](uint32_t n) {
        return n % w == 0 && n / w >= 2 && n / w - 1 <= 32;
    };
    return CandidateFunction(
        "subset_sum:" + std::to_string(w), valid,
        [w, sum_extra](uint32_t n) {
            const uint32_t b = n / w - 1;
            return w * b + b + sum_extra;
        },
        [](uint32_t n) { return 2 * uint64_t{n} + 16; },
        [w, sum_extra](const BitString& x, StepMeter& meter) {
            const uint32_t n = x.size();
            const uint32_t b = n / w - 1;
            meter.tick(n + 4);
            uint64_t sum = 0;
            for (uint32_t i = 0; i < w; ++i) {
                if (x.bit(w * b + i) == 1) sum += x.slice(i * b, b).to_index();
            }
            return x.slice(0, w * b).concat(BitString::from_index(sum, b + sum_extra));
        });
}

GeneasePair make_genease() {
    CandidateFunction f(
        "genease", [](uint32_t n) { return n >= 2 && n <= 63; }, [](uint32_t n) { return n + 1; },
        [](uint32_t n) { return 4 * uint64_t{n} + 64; },
        [](const BitString& x, StepMeter& meter) {
            const uint32_t n = x.size();
            const uint32_t b = ceil_log2(n);
            meter.tick(b + 1);
            bool prefix_zero = true;
            for (uint32_t i = 0; i < b; ++i) {
                if (x.bit(i) != 0) {
                    prefix_zero = false;
                    break;
                }
            }
            if (!prefix_zero) {
                meter.tick(n);
                return BitString::parse("0").concat(x);
            }
            meter.tick(2 * n + 16);
            const uint64_t scrambled = scramble_value(x.to_index(), n);
            return BitString::parse("1").concat(BitString::from_index(scrambled, n));
        });

    InverterProgram fast(
        "genease_fast", InverterKind::partial_with_errors, [](uint32_t) { return uint64_t{0}; },
        [](uint32_t) { return StepMeter::kUnlimited; },
        [](const BitString& y, uint32_t n, InverterContext& ctx) -> std::optional<BitString> {
            if (y.size() == n + 1 && y.bit(0) == 0) {
                ctx.meter.tick(n + 1);
                return y.slice(1, n);
            }
            for (;;) ctx.meter.tick();
        });

    return {std::move(f), std::move(fast)};
}

InverterProgram make_brute_force(const CandidateFunction& f) {
    auto fn = std::make_shared<CandidateFunction>(f);
    return InverterProgram(
        "brute_force", InverterKind::total_poly, [](uint32_t) { return uint64_t{0}; },
        [fn](uint32_t n) {
            if (n >= 48) return StepMeter::kUnlimited;
            return sat_mul(uint64_t{1} << n, fn->step_bound(n) + n + 8) + 16;
        },
        [fn](const BitString& y, uint32_t n, InverterContext& ctx) -> std::optional<BitString> {
            const uint64_t total = n >= 63 ? ~uint64_t{0} : (uint64_t{1} << n);
            for (uint64_t i = 0; i < total; ++i) {
                ctx.meter.tick();
                BitString candidate = BitString::from_index(i, n);
                if (fn->eval_raw(candidate, ctx.meter) == y) return candidate;
            }
            return std::nullopt;
        });
}

InverterProgram make_never_halt() {
    return InverterProgram(
        "never_halt", InverterKind::partial_with_errors, [](uint32_t) { return uint64_t{0}; },
        [](uint32_t) { return StepMeter::kUnlimited; },
        [](const BitString&, uint32_t, InverterContext& ctx) -> std::optional<BitString> {
            for (;;) ctx.meter.tick();
        });
}

InverterProgram make_random_guess() {
    return InverterProgram(
        "random_guess", InverterKind::randomized_poly, [](uint32_t n) { return uint64_t{n}; },
        [](uint32_t n) { return 2 * uint64_t{n} + 8; },
        [](const BitString&, uint32_t n, InverterContext& ctx) -> std::optional<BitString> {
            std::vector<uint8_t> guess(n);
            for (uint32_t i = 0; i < n; ++i) {
                ctx.meter.tick();
                guess[i] = ctx.coins.next();
            }
            return BitString(std::move(guess));
        });
}

InverterProgram make_half_solver() {
    return InverterProgram(
        "half_solver", InverterKind::total_poly, [](uint32_t) { return uint64_t{0}; },
        [](uint32_t n) { return uint64_t{n} + 8; },
        [](const BitString& y, uint32_t n, InverterContext& ctx) -> std::optional<BitString> {
            ctx.meter.tick(n + 1);
            if (y.size() == n && !y.empty() && y.bit(0) == 0) return y;
            return std::nullopt;
        });
}

InverterProgram make_trial_division() {
    return InverterProgram(
        "trial_division", InverterKind::total_poly, [](uint32_t) { return uint64_t{0}; },
        [](uint32_t n) {
            const uint64_t trials = uint64_t{1} << ((n + 3) / 4);
            return sat_mul(trials, 8) + 2 * uint64_t{n} + 32;
        },
        [](const BitString& y, uint32_t n, InverterContext& ctx) -> std::optional<BitString> {
            if (n % 2 != 0 || y.size() != n + 2 || n < 2 || n > 62) return std::nullopt;
            const uint32_t h = n / 2;
            const uint64_t target = y.to_index();
            const uint64_t lo = uint64_t{1} << h;
            const uint64_t hi = uint64_t{1} << (h + 1);
            const uint64_t budget = uint64_t{1} << ((n + 3) / 4);
            ctx.meter.tick(n + 2);
            for (uint64_t p = lo; p < lo + budget && p < hi; ++p) {
                ctx.meter.tick(4);
                if (target % p != 0) continue;
                const uint64_t q = target / p;
                if (q < lo || q >= hi) continue;
                return BitString::from_index(p - lo, h).concat(BitString::from_index(q - lo, h));
            }
            return std::nullopt;
        });
}

InverterProgram make_subset_solver(uint32_t weight_count) {
    if (weight_count < 1 || weight_count > 20)
        throw ConfigError("subset_solver: weight count must be in [1, 20]");
    const uint32_t w = weight_count;
    const uint32_t sum_extra = std::bit_width(w);
    return InverterProgram(
        "subset_solver", InverterKind::total_poly, [](uint32_t) { return uint64_t{0}; },
        [w](uint32_t n) {
            return sat_mul(uint64_t{1} << w, 2 * uint64_t{w} + 8) + 2 * uint64_t{n} + 32;
        },
        [w, sum_extra](const BitString& y, uint32_t n,
                       InverterContext& ctx) -> std::optional<BitString> {
            if (n % w != 0 || n / w < 2) return std::nullopt;
            const uint32_t b = n / w - 1;
            if (y.size() != w * b + b + sum_extra) return std::nullopt;
            ctx.meter.tick(n + 2);
            std::vector<uint64_t> weights(w);
            for (uint32_t i = 0; i < w; ++i) weights[i] = y.slice(i * b, b).to_index();
            const uint64_t target = y.slice(w * b, b + sum_extra).to_index();
            for (uint64_t sel = 0; sel < (uint64_t{1} << w); ++sel) {
                uint64_t sum = 0;
                for (uint32_t i = 0; i < w; ++i) {
                    ctx.meter.tick();
                    if ((sel >> (w - 1 - i)) & 1) sum += weights[i];
                }
                if (sum == target) {
                    return y.slice(0, w * b).concat(BitString::from_index(sel, w));
                }
            }
            return std::nullopt;
        });
}

InverterProgram make_synthetic_bernoulli(uint64_t hits, uint32_t tape_bits) {
    if (tape_bits > 62) throw ConfigError("bernoulli: tape_bits must be <= 62");
    if (hits > (uint64_t{1} << tape_bits))
        throw ConfigError("bernoulli: hits must be <= 2^tape_bits");
    return InverterProgram(
        "bernoulli:" + std::to_string(hits) + "/" + std::to_string(tape_bits),
        InverterKind::randomized_poly, [tape_bits](uint32_t) { return uint64_t{tape_bits}; },
        [tape_bits](uint32_t n) { return uint64_t{tape_bits} + 2 * uint64_t{n} + 8; },
        [hits, tape_bits](const BitString& y, uint32_t n,
                          InverterContext& ctx) -> std::optional<BitString> {
            ctx.meter.tick(tape_bits + 1);
            const uint64_t v = ctx.coins.next_word(tape_bits);
            if (y.size() != n) return std::nullopt;
            ctx.meter.tick(n);
            return v < hits ? y : y.flipped();
        });
}

InverterProgram make_timed_solver(uint64_t steps) {
    return InverterProgram(
        "timed:" + std::to_string(steps), InverterKind::total_poly,
        [](uint32_t) { return uint64_t{0}; },
        [steps](uint32_t n) { return steps + uint64_t{n} + 2; },
        [steps](const BitString& y, uint32_t n, InverterContext& ctx) -> std::optional<BitString> {
            for (uint64_t i = 0; i < steps; ++i) ctx.meter.tick();
            if (y.size() != n) return std::nullopt;
            return y;
        });
}

namespace {

bool split_param(const std::string& name, const std::string& prefix, std::string& param) {
    if (name.rfind(prefix + ":", 0) != 0) return false;
    param = name.substr(prefix.size() + 1);
    return true;
}

uint64_t parse_u64(const std::string& text, const std::string& what) {
    try {
        size_t pos = 0;
        const uint64_t v = std::stoull(text, &pos);
        if (pos != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("bad " + what + ": '" + text + "'");
    }
}

} // namespace

CandidateFunction candidate_by_name(const std::string& name) {
    if (name == "identity") return make_identity();
    if (name == "const0") return make_const_zero();
    if (name == "mult") return make_mult();
    if (name == "genease") return make_genease().f;
    if (name == "subset_sum") return make_subset_sum(2);
    std::string param;
    if (split_param(name, "subset_sum", param)) {
        return make_subset_sum(static_cast<uint32_t>(parse_u64(param, "subset_sum weight count")));
    }
    throw ConfigError("unknown candidate: " + name);
}

InverterProgram inverter_by_name(const std::string& name, const CandidateFunction& f) {
    if (name == "brute_force") return make_brute_force(f);
    if (name == "never_halt") return make_never_halt();
    if (name == "random_guess") return make_random_guess();
    if (name == "half_solver") return make_half_solver();
    if (name == "trial_division") return make_trial_division();
    if (name == "genease_fast") return make_genease().fast_inverter;
    if (name == "subset_solver") {
        // Weight count rides along on the candidate's registry name.
        std::string param;
        if (split_param(f.name(), "subset_sum", param)) {
            return make_subset_solver(
                static_cast<uint32_t>(parse_u64(param, "subset_sum weight count")));
        }
        return make_subset_solver(2);
    }
    std::string param;
    if (split_param(name, "timed", param)) {
        return make_timed_solver(parse_u64(param, "timed solver steps"));
    }
    if (split_param(name, "bernoulli", param)) {
        const size_t slash = param.find('/');
        if (slash == std::string::npos) throw ConfigError("bernoulli name needs hits/bits");
        const uint64_t hits = parse_u64(param.substr(0, slash), "bernoulli hits");
        const uint64_t bits = parse_u64(param.substr(slash + 1), "bernoulli bits");
        return make_synthetic_bernoulli(hits, static_cast<uint32_t>(bits));
    }
    throw ConfigError("unknown inverter: " + name);
}

std::vector<std::string> candidate_names() {
    return {"identity", "const0", "mult", "subset_sum:<w>", "genease"};
}

std::vector<std::string> inverter_names() {
    return {"brute_force",  "never_halt",    "random_guess",     "half_solver",
            "trial_division", "subset_solver", "genease_fast",   "timed:<steps>",
            "bernoulli:<hits>/<bits>"};
}

} // namespace candidates
} // namespace gencase
