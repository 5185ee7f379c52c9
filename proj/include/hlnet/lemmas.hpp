#pragma once

// Desk-scale verifiers for the structural lemmas and theorems about
// HL-networks and the Gamma_{k,l} Cayley graphs, plus a registry that runs a
// claim by its stable identifier.
//
// Claims that quantify over all HL-networks are checked on an explicit
// population (canonical members plus seeded random instances); every report
// lists that population and never claims more.

#include "hlnet/report.hpp"
#include "hlnet/topology.hpp"

#include <string>
#include <vector>

namespace hlnet::verify {

struct RunOptions {
  unsigned threads = 0;
};

/// Connected U in Q_n with 1 <= |U| <= gmax+1 and |N(U)| = f_n(|U|-1) induce
/// stars. n in {4, 5}; n = 3 only with `explore`, which records instead of
/// asserting.
VerificationReport verify_star_lemma(int n, int gmax, bool explore);

/// Every minimum disconnecting set leaves exactly two components, one a
/// singleton. Dimensions 2..5.
VerificationReport verify_hyper_kappa(const std::vector<topology::TopologySpec> &specs, RunOptions options = {});

/// In Gamma_{k,l}: u, w in N(v) have N(u) ∩ N(w) = {v} exactly when
/// {u, w} = {b_i v, a_ib_i v}. 8^k 2^l <= 4096.
VerificationReport verify_unique_common_neighbor(int k, int l);

/// Optimal connected A (|N(A)| = f_n(|A|-1), |A| <= gmax+1) in Gamma_{k,l}
/// are stars, or 4-vertex paths at |A| = 4.
VerificationReport verify_component_lemma(int k, int l, int gmax);

/// Every star {e} ∪ L with L a g-subset of the generators of Gamma_{k,0}
/// has |N| >= f_{3k}(g) + 1, via the pigeonhole pair {b_i, a_ib_i}.
VerificationReport verify_counterexample(int k, int g);

/// In Delta_n, n = 3s+t with s >= 3: {e} ∪ (first g of a_1^2, b_1, ...,
/// a_s^2, b_s, c_1, ..., c_t) is a star with |N| = f_n(g) for g <= gmax.
VerificationReport verify_vq_upper_bound(int n, int gmax);

/// Witness A with |N(A)| = f_n(g) for g in {2, 3}, located inside a
/// g-dimensional sub-network when the family nests them, otherwise by
/// connected small-side search.
VerificationReport verify_corollary23(const std::vector<topology::TopologySpec> &specs, int g,
                                      RunOptions options = {});

/// Random S with |S| <= f_n(g) - k01 over seeded random HL-networks leave a
/// component of >= 2^n - |S| - (g+1-k01) vertices; exhaustive at n=5, g=0.
VerificationReport verify_big_component_lemma(int n, int g, std::size_t trials, std::uint64_t seed);

/// kappa_g >= f_n(g) and every minimum R_g-cutset leaves two components, one
/// of size g+1, by exhaustive search.
VerificationReport verify_extra_zero(const std::vector<topology::TopologySpec> &specs, int gmin, int gmax,
                                     RunOptions options = {});

/// Girth 4 and at most two common neighbors per vertex pair.
VerificationReport verify_girth_common(const std::vector<topology::TopologySpec> &specs);

VerificationReport verify_neighborhood_bound(const std::vector<topology::TopologySpec> &specs, int gmax,
                                             std::size_t exhaustive_cap, std::size_t samples, std::uint64_t seed);

/// Delta_n ≅ VQ_n under vq_iso_map for n in [nmin, nmax].
VerificationReport verify_vq_isomorphism(int nmin, int nmax);

/// Closed-form VQ_n adjacency equals the recursive construction.
VerificationReport verify_vq_rule(int nmin, int nmax);

VerificationReport verify_f_monotone(int nmin, int nmax);

struct ClaimInfo {
  std::string id;
  std::string summary;
  std::string parameters; ///< "key=default ..." as accepted by run_claim
};

const std::vector<ClaimInfo> &claims();

/// Runs a claim by id. `params` maps keys to strings or integers; ranges are
/// written "a..b" and topology lists are separated by ';'. Unknown ids or
/// keys throw invalid_argument. The report's parameters are the resolved
/// values, defaults included.
VerificationReport run_claim(const std::string &id, const Json &params, RunOptions options = {});

} // namespace hlnet::verify
