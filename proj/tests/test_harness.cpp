#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gencase/candidates.hpp"
#include "gencase/delta.hpp"
#include "gencase/errors.hpp"
#include "gencase/parallel.hpp"
#include "gencase/rng.hpp"

using namespace gencase;
using namespace gencase::harness;
namespace zoo = gencase::candidates;

TEST_CASE("StepMeter budgets, signals, and nesting") {
    StepMeter unmetered;
    unmetered.tick(1000000);
    CHECK(unmetered.used() == 1000000);

    StepMeter small(5);
    small.tick(5);
    CHECK(small.used() == 5);
    CHECK_THROWS_AS(small.tick(), FuelExhaustedSignal);
    CHECK(small.used() == 5);

    // a child box trips first and leaves the parent at the forwarded count
    StepMeter outer(100);
    StepMeter inner(3, &outer);
    inner.tick(3);
    CHECK(outer.used() == 3);
    CHECK_THROWS_AS(inner.tick(), FuelExhaustedSignal);
    CHECK(outer.used() == 3);

    // the parent can also be the binding constraint
    StepMeter outer2(2);
    StepMeter inner2(10, &outer2);
    CHECK_THROWS_AS(inner2.tick(3), FuelExhaustedSignal);
}

TEST_CASE("CoinReader consumes a window and throws past it") {
    const BitString tape = BitString::parse("10110");
    CoinReader reader(tape);
    CHECK(reader.next() == 1);
    CHECK(reader.next() == 0);
    CHECK(reader.next_word(2) == 0b11);
    CHECK(reader.consumed() == 4);
    CHECK(reader.next() == 0);
    CHECK_THROWS_AS(reader.next(), TapeExhaustedSignal);

    CoinReader seg = CoinReader(tape).segment(1, 3);
    CHECK(seg.next_string(3) == BitString::parse("011"));
    CHECK_THROWS_AS(seg.next(), TapeExhaustedSignal);
}

TEST_CASE("evaluate checks domain, bounds, and length regularity") {
    const auto identity = zoo::make_identity();
    const auto ev = evaluate(identity, BitString::parse("1011"));
    CHECK(ev.output == BitString::parse("1011"));
    CHECK(ev.steps <= identity.step_bound(4));

    CHECK(evaluate(identity, BitString::parse("")).output == BitString::parse(""));

    const auto const0 = zoo::make_const_zero();
    CHECK(evaluate(const0, BitString::parse("1101")).output == BitString::parse("0000"));

    const auto mult = zoo::make_mult();
    CHECK_THROWS_AS(evaluate(mult, BitString::parse("101")), DomainError);

    // a deliberately miscoded candidate violates its declared bound
    const CandidateFunction liar(
        "liar", [](uint32_t) { return true; }, [](uint32_t n) { return n; },
        [](uint32_t) { return uint64_t{1}; },
        [](const BitString& x, StepMeter& meter) {
            meter.tick(100);
            return x;
        });
    CHECK_THROWS_AS(evaluate(liar, BitString::parse("01")), StepBoundViolation);
}

TEST_CASE("run_inverter verifies answers and reports outcomes") {
    const auto identity = zoo::make_identity();
    const auto brute = zoo::make_brute_force(identity);
    const BitString y = BitString::parse("10");
    const BitString empty_tape;

    const RunOutcome ok = run_inverter(brute, identity, y, 2, empty_tape, 1 << 16);
    CHECK(ok.status == RunStatus::success);
    REQUIRE(ok.preimage.has_value());
    CHECK(*ok.preimage == y);

    // a program that always answers 0^n is wrong on y = 10
    const InverterProgram zeros(
        "zeros", InverterKind::total_poly, [](uint32_t) { return uint64_t{0}; },
        [](uint32_t n) { return uint64_t{n} + 4; },
        [](const BitString&, uint32_t n, InverterContext& ctx) -> std::optional<BitString> {
            ctx.meter.tick(n + 1);
            return BitString::zeros(n);
        });
    const RunOutcome wrong = run_inverter(zeros, identity, y, 2, empty_tape, 1000);
    CHECK(wrong.status == RunStatus::wrong_answer);
    CHECK_FALSE(wrong.preimage.has_value());

    const auto never = zoo::make_never_halt();
    const RunOutcome spent = run_inverter(never, identity, y, 2, empty_tape, 1000);
    CHECK(spent.status == RunStatus::fuel_exhausted);
    CHECK(spent.steps_used == 1000);

    // tape misuse: a program that reads more coins than t(n) grants
    const InverterProgram greedy(
        "greedy", InverterKind::randomized_poly, [](uint32_t) { return uint64_t{2}; },
        [](uint32_t n) { return uint64_t{n} + 8; },
        [](const BitString&, uint32_t, InverterContext& ctx) -> std::optional<BitString> {
            ctx.coins.next_word(3);
            return std::nullopt;
        });
    const RunOutcome starved =
        run_inverter(greedy, identity, y, 2, BitString::parse("01"), 1000);
    CHECK(starved.status == RunStatus::tape_exhausted);

    CHECK_THROWS_AS(run_inverter(brute, identity, y, 2, BitString::parse("1"), 1000),
                    std::invalid_argument);
    CHECK_THROWS_AS(run_inverter(brute, identity, y, 2, empty_tape, 0), std::invalid_argument);

    // answers of the wrong length are never verified as successes
    const InverterProgram short_answer(
        "short", InverterKind::total_poly, [](uint32_t) { return uint64_t{0}; },
        [](uint32_t n) { return uint64_t{n} + 4; },
        [](const BitString& yy, uint32_t, InverterContext& ctx) -> std::optional<BitString> {
            ctx.meter.tick();
            return yy.slice(0, yy.size() - 1);
        });
    CHECK(run_inverter(short_answer, identity, y, 2, empty_tape, 100).status ==
          RunStatus::wrong_answer);
}

TEST_CASE("replay determinism: identical run for identical inputs") {
    const auto identity = zoo::make_identity();
    const auto guess = zoo::make_random_guess();
    for (uint64_t i = 0; i < 32; ++i) {
        const BitString tape = rng::bits(7, rng::kDomainVector, i, 6);
        const BitString y = rng::bits(9, rng::kDomainVector, i, 6);
        const RunOutcome a = run_inverter(guess, identity, y, 6, tape, 100);
        const RunOutcome b = run_inverter(guess, identity, y, 6, tape, 100);
        CHECK(a == b);
    }
}

TEST_CASE("exact_delta: analytic cases over enumerated tapes") {
    const auto identity = zoo::make_identity();

    // deterministic correct inverter: t = 0, delta = 1
    const auto brute = zoo::make_brute_force(identity);
    const auto one = exact_delta(brute, identity, BitString::parse("1011"), 1 << 16);
    CHECK(one.exact == Dyadic::one());
    CHECK(one.trials == 1);
    CHECK(one.saw_halting);

    // random guessing on an injective function over I_4: exactly 1 of 16 tapes
    const auto guess = zoo::make_random_guess();
    const auto sixteenth = exact_delta(guess, identity, BitString::parse("0111"), 1000);
    CHECK(sixteenth.exact == Dyadic(BigUint{1}, 4));
    CHECK(sixteenth.trials == 16);
    CHECK(sixteenth.counts.success == 1);
    CHECK(sixteenth.counts.wrong_answer == 15);

    // the never-halting program scores zero everywhere
    const auto never = zoo::make_never_halt();
    const auto zero = exact_delta(never, identity, BitString::parse("0111"), 500);
    CHECK(zero.exact == Dyadic::zero());
    CHECK_FALSE(zero.saw_halting);
    CHECK(zero.counts.fuel_exhausted == 1);
    CHECK(zero.mean_steps == 500.0);

    // cap enforcement
    const InverterProgram wide(
        "wide", InverterKind::randomized_poly, [](uint32_t) { return uint64_t{21}; },
        [](uint32_t n) { return uint64_t{n} + 64; },
        [](const BitString&, uint32_t, InverterContext&) -> std::optional<BitString> {
            return std::nullopt;
        });
    CHECK_THROWS_AS(exact_delta(wide, identity, BitString::parse("0111"), 100),
                    CapExceededError);
}

TEST_CASE("exact_delta equals the mean of independent per-tape runs") {
    const auto identity = zoo::make_identity();
    const auto guess = zoo::make_random_guess();
    const BitString x = BitString::parse("10110");
    const BitString y = evaluate(identity, x).output;
    const auto est = exact_delta(guess, identity, x, 1000);

    // independent oracle: reverse enumeration order, success indicators only
    uint64_t successes = 0;
    for (uint64_t i = 32; i-- > 0;) {
        const BitString tape = BitString::from_index(i, 5);
        if (run_inverter(guess, identity, y, 5, tape, 1000).status == RunStatus::success) {
            ++successes;
        }
    }
    CHECK(est.exact == Dyadic(BigUint{successes}, 5));
}

TEST_CASE("estimate_delta: oracle containment and determinism") {
    const auto identity = zoo::make_identity();
    const auto brute = zoo::make_brute_force(identity);
    const auto sure = estimate_delta(brute, identity, BitString::parse("110"), 100, 1 << 16, 5);
    CHECK(sure.delta == 1.0);
    CHECK(sure.half_width == doctest::Approx(hoeffding_half_width(100)));

    const auto guess = zoo::make_random_guess();
    const BitString x = BitString::parse("0111");
    const auto sampled = estimate_delta(guess, identity, x, 10000, 1000, 42);
    const auto truth = exact_delta(guess, identity, x, 1000);
    CHECK(std::abs(sampled.delta - truth.delta) <= sampled.half_width);

    const auto replay = estimate_delta(guess, identity, x, 10000, 1000, 42);
    CHECK(replay.delta == sampled.delta);

    const auto never = zoo::make_never_halt();
    CHECK(estimate_delta(never, identity, x, 50, 200, 1).delta == 0.0);
    CHECK_THROWS_AS(estimate_delta(never, identity, x, 0, 200, 1), std::invalid_argument);
}

TEST_CASE("per-input estimates are independent of thread scheduling") {
    const auto identity = zoo::make_identity();
    const auto guess = zoo::make_random_guess();
    const BitString x = BitString::parse("010101");
    set_thread_count(1);
    const auto serial = estimate_delta(guess, identity, x, 4000, 500, 11);
    set_thread_count(4);
    const auto parallel = estimate_delta(guess, identity, x, 4000, 500, 11);
    set_thread_count(1);
    CHECK(serial.delta == parallel.delta);
    CHECK(serial.mean_steps == parallel.mean_steps);
    CHECK(serial.counts.success == parallel.counts.success);
}

TEST_CASE("total inverters never exhaust fuel at or above their declared bound") {
    const auto identity = zoo::make_identity();
    for (const auto* name : {"brute_force", "half_solver", "random_guess"}) {
        const auto prog = zoo::inverter_by_name(name, identity);
        for (uint32_t n = 1; n <= 5; ++n) {
            const uint64_t fuel = prog.step_bound(n);
            REQUIRE(fuel != StepMeter::kUnlimited);
            for (uint64_t xi = 0; xi < (uint64_t{1} << n); ++xi) {
                const BitString x = BitString::from_index(xi, n);
                const auto est = exact_delta(prog, identity, x, fuel);
                CHECK(est.counts.fuel_exhausted == 0);
            }
        }
    }
}

TEST_CASE("fuel monotonicity: more fuel never destroys a success") {
    const auto identity = zoo::make_identity();
    const auto guess = zoo::make_random_guess();
    const BitString x = BitString::parse("1010");
    const BitString y = evaluate(identity, x).output;
    for (uint64_t ti = 0; ti < 16; ++ti) {
        const BitString tape = BitString::from_index(ti, 4);
        for (uint64_t fuel : {1ull, 3ull, 5ull, 9ull, 100ull}) {
            const RunOutcome lean = run_inverter(guess, identity, y, 4, tape, fuel);
            const RunOutcome rich = run_inverter(guess, identity, y, 4, tape, fuel + 7);
            if (lean.status == RunStatus::success) {
                CHECK(rich.status == RunStatus::success);
                CHECK(*rich.preimage == *lean.preimage);
            }
        }
    }
}

TEST_CASE("success_set composes with density measurement") {
    const auto identity = zoo::make_identity();
    SuccessSetParams params;
    params.fuel = FuelSchedule::fixed(1 << 16);

    const auto full = harness::success_set(zoo::make_brute_force(identity), identity, 1.0, params);
    CHECK(strata::exact_density(full, 4).exact == Dyadic::one());

    const auto none = harness::success_set(zoo::make_never_halt(), identity, 1.0,
                                           SuccessSetParams{.fuel = FuelSchedule::fixed(300)});
    CHECK(strata::exact_density(none, 4).exact == Dyadic::zero());

    const auto half = harness::success_set(zoo::make_half_solver(), identity, 1.0, params);
    CHECK(strata::exact_density(half, 6).exact == Dyadic(BigUint{1}, 1));

    // boundary: delta exactly n^-c is excluded by the strict inequality;
    // a delta-1/4 program sits exactly on the threshold at n = 4
    const auto quarter = zoo::make_synthetic_bernoulli(1, 2);
    const auto edge = harness::success_set(quarter, identity, 1.0, params);
    CHECK(strata::exact_density(edge, 4).exact == Dyadic::zero());
    CHECK(exact_delta(quarter, identity, BitString::parse("0110"), 1000).exact ==
          Dyadic(BigUint{1}, 2));
}

TEST_CASE("sampled success sets are flagged as estimated membership") {
    const auto identity = zoo::make_identity();
    SuccessSetParams params;
    params.mode = strata::Mode::sampled;
    params.fuel = FuelSchedule::fixed(4096);
    params.trials = 50;
    params.seed = 8;
    const auto set = harness::success_set(zoo::make_half_solver(), identity, 1.0, params);
    CHECK(set.estimated_membership());
    const auto profile =
        strata::density_profile(set, {4, 5, 6}, strata::Mode::sampled, {100, 8, 0.99});
    CHECK(profile.estimated_membership);

    SuccessSetParams exact_params;
    exact_params.fuel = FuelSchedule::fixed(4096);
    CHECK_FALSE(
        harness::success_set(zoo::make_half_solver(), identity, 1.0, exact_params)
            .estimated_membership());
}
