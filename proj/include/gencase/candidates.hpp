#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gencase/function.hpp"
#include "gencase/inverter.hpp"

namespace gencase {
namespace candidates {

/// f(x) = x, m(n) = n. Degenerate baseline: every inverter that can echo
/// its input achieves delta = 1.
harness::CandidateFunction make_identity();

/// f(x) = 0^n. Maximal-preimage degenerate case: any length-n answer is a
/// valid preimage of the all-zeros output.
harness::CandidateFunction make_const_zero();

/// x = p_bits || q_bits (n even), each half read as an (n/2)-bit value with
/// an implicit leading 1, so p, q lie in [2^(n/2), 2^(n/2+1)). Output is
/// binary(p*q) padded to m(n) = n + 2 bits. The forced top bits keep zero
/// factors out of the preimage structure. Valid for even n in [2, 62].
harness::CandidateFunction make_mult();

/// x = w fixed-width weights || w selector bits, with weight width
/// b = n/w - 1 (so the valid lengths are the multiples of w with n/w >= 2
/// and b <= 32). Output: the weights followed by the binary sum of the
/// selected weights, padded to b + bit_width(w) bits.
harness::CandidateFunction make_subset_sum(uint32_t weight_count);

struct GeneasePair {
    harness::CandidateFunction f;
    harness::InverterProgram fast_inverter;
};

/// A function that is easy to invert on most of each sphere and requires
/// search on a thin slice, exhibiting the gap between generic and
/// worst-case behavior. With b = ceil(log2 n):
///   first b bits of x not all zero -> f(x) = 0 || x          (self-revealing)
///   otherwise                      -> f(x) = 1 || scramble(x)
/// where scramble is a fixed keyed affine/xorshift permutation of n-bit
/// values. The paired fast inverter strips the flag from 0-prefixed
/// outputs and loops forever on 1-prefixed ones, so its success set is
/// exactly { x : first b bits not all zero } with sphere density
/// 1 - 2^-b -- approaching 1 at a ~1/n rate: generic, not strongly so.
/// Valid for n in [2, 63].
GeneasePair make_genease();

/// Enumerates all length-n candidates in index order, checking each via f.
/// Total within its declared (exponential at desk scale) step bound; t = 0.
harness::InverterProgram make_brute_force(const harness::CandidateFunction& f);

/// Ticks forever. The canonical non-halting partial program; delta = 0 on
/// everything.
harness::InverterProgram make_never_halt();

/// Reads t(n) = n coins and answers them verbatim. On an injective
/// candidate its per-input delta is exactly 2^-n.
harness::InverterProgram make_random_guess();

/// Identity-specific: answers y when y starts with 0, halts wrong
/// otherwise. Success set = half of each sphere.
harness::InverterProgram make_half_solver();

/// mult-specific: trial division over the first 2^ceil(n/4) candidate
/// values of p. Halts without an answer when no divisor is found.
harness::InverterProgram make_trial_division();

/// subset_sum-specific: reads the weights off y and searches all 2^w
/// selector combinations. Step count grows as 2^w, which is what makes it
/// interesting for budget-clipping and achievement-ratio experiments.
harness::InverterProgram make_subset_solver(uint32_t weight_count);

/// Identity-specific synthetic program with exact per-input success
/// probability hits / 2^tape_bits: reads tape_bits coins and answers
/// correctly iff their value is < hits. The workhorse for amplification
/// measurements, where the per-input delta must be known in closed form.
harness::InverterProgram make_synthetic_bernoulli(uint64_t hits, uint32_t tape_bits);

/// Identity-specific: ticks exactly `steps` then answers correctly.
/// Used to probe budget boundaries.
harness::InverterProgram make_timed_solver(uint64_t steps);

/// Registry lookups used by experiment configs. Candidate names:
/// identity, const0, mult, subset_sum:<w>, genease. Inverter names:
/// brute_force, never_halt, random_guess, half_solver, trial_division,
/// subset_solver, genease_fast, timed:<steps>, bernoulli:<hits>/<bits>.
/// Unknown names throw ConfigError.
harness::CandidateFunction candidate_by_name(const std::string& name);
harness::InverterProgram inverter_by_name(const std::string& name,
                                          const harness::CandidateFunction& f);
std::vector<std::string> candidate_names();
std::vector<std::string> inverter_names();

} // namespace candidates
} // namespace gencase
