#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "gencase/candidates.hpp"
#include "gencase/delta.hpp"
#include "gencase/errors.hpp"
#include "gencase/rng.hpp"

using namespace gencase;
using namespace gencase::harness;
namespace zoo = gencase::candidates;

namespace {

/// Length regularity |f(x)| = m(|x|) over sampled inputs; evaluate() also
/// re-checks it internally on every call.
void check_length_regular(const CandidateFunction& f, uint32_t n, uint64_t samples = 64) {
    for (uint64_t i = 0; i < samples; ++i) {
        const BitString x = rng::bits(0xFEED, rng::kDomainVector, i ^ (uint64_t{n} << 32), n);
        const auto ev = evaluate(f, x);
        CHECK(ev.output.size() == f.output_length(n));
    }
}

} // namespace

TEST_CASE("identity and const0 behave like their definitions") {
    const auto identity = zoo::make_identity();
    CHECK(evaluate(identity, BitString::parse("0101")).output == BitString::parse("0101"));
    CHECK(evaluate(identity, BitString()).output == BitString());

    const auto const0 = zoo::make_const_zero();
    CHECK(evaluate(const0, BitString::parse("1101")).output == BitString::parse("0000"));

    // f = const0: every guess is a valid preimage, so random guessing wins always
    const auto guess = zoo::make_random_guess();
    const auto sure = exact_delta(guess, const0, BitString::parse("1011"), 1000);
    CHECK(sure.exact == Dyadic::one());

    const auto never = zoo::make_never_halt();
    CHECK(exact_delta(never, const0, BitString::parse("1011"), 300).exact == Dyadic::zero());

    // brute force achieves delta 1 across a full small sphere of identity
    const auto brute = zoo::make_brute_force(identity);
    for (uint64_t xi = 0; xi < 8; ++xi) {
        CHECK(exact_delta(brute, identity, BitString::from_index(xi, 3), 1 << 16).exact ==
              Dyadic::one());
    }
}

TEST_CASE("mult encoding: balanced split with implicit leading ones") {
    const auto mult = zoo::make_mult();
    CHECK(mult.output_length(4) == 6);

    // oracle: direct 64-bit integer multiplication on the documented encoding
    const BitString x = BitString::parse("1111");
    const uint64_t p = (uint64_t{1} << 2) | 0b11;  // 7
    const uint64_t q = (uint64_t{1} << 2) | 0b11;  // 7
    CHECK(p * q == 49);
    CHECK(evaluate(mult, x).output == BitString::from_index(49, 6));
    CHECK(evaluate(mult, x).output.to_string() == "110001");

    for (uint64_t xi = 0; xi < 64; ++xi) {
        const BitString input = BitString::from_index(xi, 6);
        const uint64_t pp = (uint64_t{1} << 3) | input.slice(0, 3).to_index();
        const uint64_t qq = (uint64_t{1} << 3) | input.slice(3, 3).to_index();
        CHECK(evaluate(mult, input).output == BitString::from_index(pp * qq, 8));
    }

    CHECK_THROWS_AS(evaluate(mult, BitString::parse("101")), DomainError);
    check_length_regular(mult, 8);
    check_length_regular(mult, 12);

    // brute force inverts everything at desk scale
    const auto brute = zoo::make_brute_force(mult);
    for (uint64_t xi : {0ull, 17ull, 42ull, 63ull}) {
        CHECK(exact_delta(brute, mult, BitString::from_index(xi, 6), 1 << 22).exact ==
              Dyadic::one());
    }

    // trial division conquers a measurable slice of the sphere
    SuccessSetParams params;
    params.fuel = FuelSchedule::fixed(1 << 16);
    const auto division_set =
        harness::success_set(zoo::make_trial_division(), mult, 1.0, params);
    const auto density = strata::exact_density(division_set, 8);
    CHECK(density.value > 0.0);
    CHECK(density.value < 1.0);
}

TEST_CASE("subset_sum encoding and its selector-space solver") {
    const auto f = zoo::make_subset_sum(2);
    // n = 6 -> weight width b = 2: weights w0 w1, two selector bits
    REQUIRE(f.in_domain(6));
    CHECK(f.output_length(6) == 4 + 2 + 2);

    // all selectors off: sum = 0
    CHECK(evaluate(f, BitString::parse("101100")).output ==
          BitString::parse("1011").concat(BitString::from_index(0, 4)));
    // single weight selected: sum = that weight (w0 = 10b = 2)
    CHECK(evaluate(f, BitString::parse("101110")).output ==
          BitString::parse("1011").concat(BitString::from_index(2, 4)));
    // both: 2 + 3
    CHECK(evaluate(f, BitString::parse("101111")).output ==
          BitString::parse("1011").concat(BitString::from_index(5, 4)));

    check_length_regular(f, 6);
    check_length_regular(f, 8);

    const auto solver = zoo::make_subset_solver(2);
    for (uint64_t xi = 0; xi < 64; ++xi) {
        const auto est = exact_delta(solver, f, BitString::from_index(xi, 6), 1 << 16);
        CHECK(est.exact == Dyadic::one());
    }

    // solver work grows with the selector space: w = 3 costs more steps
    const auto f3 = zoo::make_subset_sum(3);
    const auto solver3 = zoo::make_subset_solver(3);
    REQUIRE(f3.in_domain(6));  // b = 1
    const auto small = exact_delta(solver, f, BitString::parse("000000"), 1 << 16);
    const auto large = exact_delta(solver3, f3, BitString::parse("000000"), 1 << 16);
    CHECK(large.exact == Dyadic::one());
    CHECK(large.max_halting_steps > small.max_halting_steps);

    CHECK_THROWS_AS(zoo::make_subset_sum(0), ConfigError);
}

TEST_CASE("genease: scramble is a bijection and the flag split is exact") {
    // bijectivity of the hard branch's permutation, via the full n = 8 sphere
    const auto pair = zoo::make_genease();
    std::set<std::string> images;
    for (uint64_t xi = 0; xi < 256; ++xi) {
        images.insert(evaluate(pair.f, BitString::from_index(xi, 8)).output.to_string());
    }
    CHECK(images.size() == 256);

    // 0-prefixed outputs reveal x; 1-prefixed outputs make the fast inverter loop
    const BitString easy = BitString::parse("10100101");  // first 3 bits not all zero
    const auto easy_out = evaluate(pair.f, easy).output;
    CHECK(easy_out.bit(0) == 0);
    CHECK(easy_out.slice(1, 8) == easy);

    const BitString hard = BitString::parse("00010110");  // b=3 zero prefix
    const auto hard_out = evaluate(pair.f, hard).output;
    CHECK(hard_out.bit(0) == 1);

    const BitString no_tape;
    CHECK(run_inverter(pair.fast_inverter, pair.f, easy_out, 8, no_tape, 4096).status ==
          RunStatus::success);
    const auto stuck = run_inverter(pair.fast_inverter, pair.f, hard_out, 8, no_tape, 4096);
    CHECK(stuck.status == RunStatus::fuel_exhausted);
    CHECK(stuck.steps_used == 4096);

    check_length_regular(pair.f, 5);
    check_length_regular(pair.f, 16);
}

TEST_CASE("genease success density is exactly 1 - 2^-ceil(log2 n)") {
    const auto pair = zoo::make_genease();
    SuccessSetParams params;
    params.fuel = FuelSchedule::poly(4.0, 1.0, 64);
    const auto set = harness::success_set(pair.fast_inverter, pair.f, 1.0, params);
    for (uint32_t n : {4u, 8u, 16u}) {
        uint32_t b = 0;
        while ((uint32_t{1} << b) < n) ++b;
        const Dyadic expect = Dyadic(BigUint{1}, b).complement();
        CHECK(strata::exact_density(set, n).exact == expect);
    }
    CHECK(strata::exact_density(set, 8).exact == Dyadic(BigUint{7}, 3));
    CHECK(strata::exact_density(set, 16).exact == Dyadic(BigUint{15}, 4));
}

TEST_CASE("registry round trips and rejects junk") {
    for (const auto* name : {"identity", "const0", "mult", "subset_sum:3", "genease"}) {
        CHECK_NOTHROW(zoo::candidate_by_name(name));
    }
    const auto identity = zoo::candidate_by_name("identity");
    for (const auto* name : {"brute_force", "never_halt", "random_guess", "half_solver",
                             "trial_division", "genease_fast", "timed:7", "bernoulli:3/4"}) {
        CHECK_NOTHROW(zoo::inverter_by_name(name, identity));
    }
    CHECK_THROWS_AS(zoo::candidate_by_name("nope"), ConfigError);
    CHECK_THROWS_AS(zoo::candidate_by_name("subset_sum:x"), ConfigError);
    CHECK_THROWS_AS(zoo::inverter_by_name("nope", identity), ConfigError);
    CHECK_THROWS_AS(zoo::inverter_by_name("bernoulli:nope", identity), ConfigError);

    const auto solver = zoo::inverter_by_name("subset_solver", zoo::candidate_by_name("subset_sum:3"));
    CHECK(solver.name() == "subset_solver");
}

TEST_CASE("synthetic bernoulli hits its exact advertised delta") {
    const auto identity = zoo::make_identity();
    for (const auto& [hits, bits] : std::vector<std::pair<uint64_t, uint32_t>>{
             {0, 4}, {1, 4}, {5, 4}, {16, 4}, {3, 6}}) {
        const auto prog = zoo::make_synthetic_bernoulli(hits, bits);
        const auto est = exact_delta(prog, identity, BitString::parse("10101"), 4096);
        CHECK(est.exact == Dyadic(BigUint{hits}, bits));
    }
    CHECK_THROWS_AS(zoo::make_synthetic_bernoulli(17, 4), ConfigError);
}

TEST_CASE("brute force is verified-total over every candidate's small spheres") {
    const auto genease = zoo::make_genease();
    std::vector<std::pair<CandidateFunction, std::vector<uint32_t>>> cases = {
        {zoo::make_identity(), {1, 3, 5}},
        {zoo::make_const_zero(), {2, 4}},
        {zoo::make_mult(), {4, 6}},
        {zoo::make_subset_sum(2), {4, 6}},
        {genease.f, {3, 5}},
    };
    for (const auto& [f, radii] : cases) {
        const auto brute = zoo::make_brute_force(f);
        for (uint32_t n : radii) {
            const uint64_t fuel = brute.step_bound(n);
            REQUIRE(fuel != StepMeter::kUnlimited);
            for (uint64_t xi = 0; xi < (uint64_t{1} << n); ++xi) {
                const auto est = exact_delta(brute, f, BitString::from_index(xi, n), fuel);
                CHECK(est.counts.fuel_exhausted == 0);
                CHECK(est.exact == Dyadic::one());
            }
        }
    }
}

TEST_CASE("timed solver succeeds after exactly its step count") {
    const auto identity = zoo::make_identity();
    const auto timed = zoo::make_timed_solver(16);
    const BitString x = BitString::parse("0110");
    const BitString y = evaluate(identity, x).output;
    const BitString no_tape;
    const RunOutcome exact_fit = run_inverter(timed, identity, y, 4, no_tape, 16);
    CHECK(exact_fit.status == RunStatus::success);
    CHECK(exact_fit.steps_used == 16);
    const RunOutcome starved = run_inverter(timed, identity, y, 4, no_tape, 15);
    CHECK(starved.status == RunStatus::fuel_exhausted);
}
