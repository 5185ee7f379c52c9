#pragma once

// g-extra connectivity: the benchmark function f_n(g), the exhaustive
// R_g-cutset oracle, witness-based upper bounds over connected small sides,
// and the structural checks used by the lemma verifiers.
//
// Every search is deterministic in its inputs. Work is split into chunks that
// are processed in parallel; partial results are combined by a minimum over
// (value, lexicographic witness), so the thread count never changes a result.

#include "hlnet/compact_graph.hpp"
#include "hlnet/dihedral.hpp"
#include "hlnet/report.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace hlnet::extra {

/// f_n(g) = n(g+1) - g(g+3)/2. Requires n >= 1, g >= 0.
std::int64_t f_value(std::int64_t n, std::int64_t g);

/// Strict increase on 0..n-2, the maximum f_n(n-2) = n(n-1)/2 + 1, and
/// f_n(n-1) = f_n(n-2) > f_n(n) = f_n(n-3) > f_n(g) for g <= n-4. n >= 4.
VerificationReport f_monotonicity_check(int n);

/// f_{n-1}(g1) + f_{n-1}(g2) >= f_n(g) + 1 for 4 <= n <= n_max,
/// 0 <= g1, g2 <= n-2, 0 <= g <= n-3 and g1 + g2 + 2 > g + 1.
VerificationReport f_sum_inequality_check(int n_max);

/// G - S has at least two components and each has >= g+1 vertices.
bool is_rg_cutset(const CompactGraph &g, const VertexSet &s, int extra);

enum class CertificateKind { exact, upper_bound, lower_bound_cited };
enum class SearchOutcome { definitive, bounded };

std::string to_string(CertificateKind kind);

struct CutsetCertificate {
  CertificateKind kind = CertificateKind::exact;
  SearchOutcome outcome = SearchOutcome::definitive;
  int extra = 0;
  std::optional<std::size_t> value;
  /// exact: the cutset S. upper_bound: the small side A (cutset is N(A)).
  std::vector<Vertex> witness;
  std::vector<Vertex> cutset;
  std::vector<std::size_t> component_sizes;
  Json budget = Json::object();
};

struct SearchOptions {
  unsigned threads = 0; ///< 0 = hardware concurrency
};

/// Exhaustive search over S in ascending cardinality 1..max_cardinality,
/// lexicographic within a cardinality. Returns the lexicographically least
/// R_g-cutset of minimum size as an exact certificate, or a bounded outcome
/// when none exists up to max_cardinality.
CutsetCertificate exact_extra_connectivity(const CompactGraph &g, int extra, std::size_t max_cardinality,
                                           SearchOptions options = {});

/// All R_g-cutsets of exactly `cardinality` vertices, in lexicographic order.
std::vector<std::vector<Vertex>> all_rg_cutsets(const CompactGraph &g, int extra, std::size_t cardinality,
                                                SearchOptions options = {});

/// Visits every connected vertex set with min_size <= |A| <= max_size exactly
/// once (rooted extension: A is reached only from its least vertex). The
/// callback receives A in insertion order and |N(A)|.
using ConnectedSetVisitor = std::function<void(std::span<const Vertex> members, std::size_t boundary)>;
void for_each_connected_set(const CompactGraph &g, std::size_t min_size, std::size_t max_size,
                            const ConnectedSetVisitor &visit);

/// Minimum |N(A)| over connected A with g+1 <= |A| <= size_cap for which
/// N(A) is an R_g-cutset. Ties break on the sorted member list of A.
CutsetCertificate upper_bound_by_small_side(const CompactGraph &g, int extra, std::size_t size_cap,
                                            SearchOptions options = {});

struct StarNeighborhood {
  std::optional<std::size_t> value; ///< nullopt: no leaf set induces a star
  std::vector<std::size_t> leaves;  ///< generator indices of the best leaf set
  std::vector<Vertex> star;         ///< {e} ∪ leaves as vertices, ascending
  std::size_t leaf_sets = 0;        ///< C(|S|, g) sets examined
  std::size_t star_sets = 0;        ///< of which induce a star
  bool cutset_valid = false;        ///< N(best star) is an R_g-cutset
};

/// Minimum |N({e} ∪ L)| over g-subsets L of the generators whose members are
/// pairwise non-adjacent. `g` must be the Cayley graph of `gens`.
StarNeighborhood min_star_neighborhood(const group::GeneratingSet &gens, const CompactGraph &graph, int extra);

/// Largest component of G - S has at least 2^n - |S| - (g+1-k01) vertices.
/// Requires an n-regular graph on 2^n vertices, n >= 5, 0 <= g <= n-3,
/// k01 in {0,1} and |S| <= f_n(g) - k01.
bool big_component_check(const CompactGraph &g, const VertexSet &s, int extra, int k01);

/// G - S has exactly two components, one of them of size g+1.
VerificationReport hyper_kg_check(const CompactGraph &g, int extra, const VertexSet &s);

/// Minimum |N(U)| per size 1..gmax+1 against f_n(|U|-1): exhaustive over all
/// subsets up to `exhaustive_cap`, `samples` seeded random subsets beyond.
VerificationReport neighborhood_bound_check(const CompactGraph &g, int gmax, std::size_t exhaustive_cap,
                                            std::size_t samples, std::uint64_t seed);

/// n for an n-regular graph on 2^n vertices; throws otherwise.
int hl_dimension(const CompactGraph &g);

} // namespace hlnet::extra
