#pragma once

#include <flatsep/geometry.hpp>
#include <flatsep/solvers.hpp>

#include <optional>
#include <utility>
#include <vector>

namespace flatsep {

/// Integers a_1..a_n and a target b; the question is whether some subset
/// of the a_i sums to exactly b (the empty subset counts, with sum 0).
struct SubsetSumInstance {
  std::vector<long long> a;
  long long b = 0;

  void validate() const;  // throws Error(MalformedInstance) if n == 0
};

/// Items with positive integer weights, `bins` bins of integer capacity
/// `capacity`. Two readings share this struct: the packing question
/// ("every item into some bin, no bin above capacity") and the equal-fill
/// question ("every bin filled to exactly its capacity"); each operation
/// below documents which reading it uses.
struct BinPackingInstance {
  std::vector<long long> w;
  int bins = 1;
  long long capacity = 1;

  void validate() const;  // throws Error(MalformedInstance) on bad sizes
};

/// Simple undirected graph on vertices 0..n-1; edges are unordered pairs
/// stored with first < second, no duplicates, no self-loops.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  void validate() const;  // throws Error(MalformedInstance) on bad edges
};

/// A point family together with the flat dimension its transversal
/// question asks about.
struct FlatTransInstance {
  PointFamily family;
  int target = 0;
};

/// Encodes a subset-sum instance as a hyperplane transversal question:
/// n+2 sets in R^{n+1}. Set i <= n holds v_i = (a_i, e_i) and
/// w_i = (0, e_i); set n+1 holds the single point (-b, -1, ..., -1); set
/// n+2 holds the origin. Some subset of the a_i sums to b iff one point
/// per set fits on a hyperplane: choosing v_i exactly on the subset I and
/// w_i elsewhere makes the chosen points sum to zero iff sum_I a_i = b.
PointFamily subsetsum_to_hyptrans(const SubsetSumInstance& inst);

/// Converts a packing question (bin sums <= capacity) into an equal-fill
/// question (bin sums == capacity) by appending unit-weight filler items
/// until the total weight is bins * capacity. Returns nullopt when the
/// packing answer is already forced to "no" without any search: total
/// weight above bins * capacity, or some single item above capacity.
/// Throws Error(BudgetExceeded) when more than 10^6 filler items would be
/// needed.
std::optional<BinPackingInstance> binpacking_to_equal(
    const BinPackingInstance& inst);

/// Encodes an equal-fill instance (n items, k bins, capacity b) as a flat
/// transversal question at target dimension k*n. Ambient dimension is
/// k + n + k*n: bin coordinates 1..k, item coordinates k+1..k+n, then one
/// coordinate per (item, bin) pair, pair (i, j) at k + n + (i-1)*k + j.
/// Set l = (i-1)*k + j (pairs in lexicographic (i, j) order) holds
///   v_{i,j} = w_i * e_j + e_{k+i} + e_{pair(i,j)}   ("item i in bin j")
///   u_{i,j} = e_{pair(i,j)}                          ("item i not in bin j"),
/// set k*n + 1 holds c = (-b, ..., -b, -1, ..., -1) (-b on bin
/// coordinates, -1 elsewhere), and set k*n + 2 holds the origin. The bins
/// can all be filled exactly iff some k*n-flat meets every set. Throws
/// Error(BudgetExceeded) when the ambient dimension would exceed 10^6.
FlatTransInstance equalbin_to_flattrans(const BinPackingInstance& equalFill);

/// Two liftings of a flat transversal question to a hyperplane transversal
/// question; both require the last set to be exactly {0}.
enum class LiftMode {
  /// Ambient grows to R^{D+2}: the original sets are zero-padded by two
  /// coordinates, singleton padding sets {(0, ..., 0, 1, i)} are appended
  /// for i = m..D+2, and {0} stays last; D+3 sets total. Whenever three
  /// or more padding sets appear they are collinear (s_m - 2 s_{m+1} +
  /// s_{m+2} = 0), so any padded output is a yes-instance regardless of
  /// the input answer; this mode is kept for exhibiting that defect.
  Paper,
  /// Ambient stays R^D: the original sets are kept, g = D+1-m singleton
  /// padding sets are appended before the final {0}, each padding point
  /// picked from the moment curve (1, s, s^2, ..., s^{D-1}), s = 1, 2,
  /// ..., accepting a candidate iff it lies outside the linear span of
  /// every choice of one point per earlier set (original sets and pads
  /// accepted so far); D+1 sets total. Answer-preserving: a dependent
  /// original choice stays dependent, and an independent one stays
  /// independent because each pad avoids every such span.
  Repaired,
};

/// Lifts an (m-2)-flat transversal question on m sets (last set exactly
/// {0}, m <= D+1) to a hyperplane transversal question per `mode`. When
/// m = D+1 the input already asks the hyperplane question and is returned
/// unchanged in both modes. Throws Error(PreconditionViolated) when the
/// last set is not exactly {0} or m > D+1, and Error(BudgetExceeded) in
/// Repaired mode when the span scan would enumerate more than 10^6
/// choices of one point per set.
PointFamily flattrans_to_hyptrans(const PointFamily& family, LiftMode mode);

/// Encodes a hyperplane transversal question on k point sets of size at
/// most two (one of them exactly {0}) as a segment transversal question
/// in R^{D+k}. Writing each set as {A_i, B_i} (B_i = A_i for singletons),
/// set i contributes the original segment [(A_i, 0), (B_i, 0)] and the
/// gadget segment [(-A_i, e_i), (2 B_i, e_i)], in that order; the origin
/// is appended as a degenerate segment, for 2k+1 segments total. Throws
/// Error(SetTooLarge) if a set has more than two points and
/// Error(NoOriginSet) if no set is exactly {0}.
SegmentFamily twopoint_to_segments(const PointFamily& family);

/// Encodes "does g have a k-clique" (2 <= k <= n, else Error(BadK)) as a
/// flat transversal question at target dimension k^2 + 2k. Ambient
/// dimension is k^2 + 4k: one coordinate per gadget (k^2 encoding gadgets
/// row-major, k row gadgets, k column gadgets), then left slot
/// coordinates k^2+2k+1 .. k^2+3k and right slot coordinates
/// k^2+3k+1 .. k^2+4k. With K = k^2+2k, gadget coordinate f and slots
/// L_a = K + a, R_b = K + k + b:
///   encoding gadget (a, a): points e_f + k^i (e_{L_a} + e_{R_a}), i in [n]
///   encoding gadget (a, b), a != b: points e_f + k^i e_{L_a} + k^j e_{R_b}
///     for every directed pair (i, j) with {i, j} an edge
///   row gadget a:    points e_f - k^{i+1} e_{L_a}, i in [n]
///   column gadget b: points e_f - k^{j+1} e_{R_b}, j in [n]
/// followed by {0} and {p_1} with p_1 = -1 on the first K coordinates and
/// 0 after. Every coordinate has magnitude at most k^{n+1}.
FlatTransInstance clique_to_flattrans(const Graph& g, int k);

/// Exhaustive subset scan in increasing binary code order (bit i = item
/// i); returns the first subset (indices ascending) summing to b, or
/// nullopt. Throws Error(BudgetExceeded) when 2^n would exceed 2^20.
std::optional<std::vector<int>> solve_subsetsum(const SubsetSumInstance& inst);

/// Exhaustive assignment scan for the equal-fill question: returns the
/// lexicographically first bin assignment (entry t = bin of item t,
/// 0-based, item 0 most significant) filling every bin to exactly the
/// capacity, or nullopt. Throws Error(BudgetExceeded) when k^n would
/// exceed 2^20.
std::optional<std::vector<int>> solve_equalbin(
    const BinPackingInstance& equalFill);

/// Exhaustive k-subset scan in lexicographic order; returns the first
/// vertex set (ascending) inducing a complete subgraph, or nullopt (also
/// nullopt for k > n; throws Error(BadK) for k < 1). Throws
/// Error(BudgetExceeded) when C(n, k) would exceed 2^20.
std::optional<std::vector<int>> has_clique(const Graph& g, int k);

}  // namespace flatsep
