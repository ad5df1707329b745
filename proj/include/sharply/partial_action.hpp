#pragma once

#include <deque>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sharply::construct {

// A partial injection on the point set, with its letter code (2k for c_k,
// 2k+1 for n_k). img/pre hold -1 where undefined; pre is the inverse map.
struct GenMap {
  int letter = 0;
  bool commuting = false;
  int index = 0;
  std::vector<int> img;
  std::vector<int> pre;

  std::string name() const;
};

// Lazily enumerated range of ordered point pairs: all (a,b) with a != b,
// a,b < hi, and not both < lo, in lexicographic order. `remaining` counts
// pairs not yet yielded; (a,b) is the cursor of the next pair.
struct PairBlock {
  int lo = 0;
  int hi = 0;
  int a = 0;
  int b = -1;
  long long remaining = 0;
};

// Growing finite set with a total fixed-point-free involution t and partial
// actions of commuting generators c_k (which commute with t) and free
// generators n_k, extended pair by pair toward sharp 2-transitivity.
struct Stage {
  int num_points = 0;
  std::vector<int> t_map;            // total involution, no fixed points
  std::vector<GenMap> gens;          // activation order
  std::vector<int> c_slots;          // index k-1 -> position in gens
  std::vector<int> n_slots;
  std::pair<int, int> base_pair{0, 1};
  std::deque<std::pair<int, int>> queue_head;
  std::deque<PairBlock> queue_blocks;
  // Pair -> canonical letter word joining base_pair to it (evaluated left
  // to right). Maintained as the exact canonical-word orbit of the base
  // pair: a pair is absent exactly when no word over the current partial
  // maps joins the base pair to it.
  std::map<std::pair<int, int>, std::vector<int>> joined;
  long long step_count = 0;          // generators minted
  long long pairs_processed = 0;
  unsigned rng_seed = 0;
  int next_c = 1;
  int next_n = 1;

  // Adds a fresh point (t and all generators undefined there).
  int new_point();
  // Activates a fresh generator of the given kind; returns its gens index.
  int add_generator(bool commuting);
  // Applies a single letter (0 = t, +-2k = c_k^{+-1}, +-(2k+1) = n_k^{+-1});
  // -1 when undefined. Unknown generator letters throw.
  int apply_letter(int code, int p) const;
  // Left-to-right evaluation; -1 as soon as any step is undefined.
  int eval_word(const std::vector<int>& letters, int p) const;
  // Evaluation of the inverse word (reverse order, inverted letters).
  int eval_word_inverse(const std::vector<int>& letters, int p) const;
  // Letters of all active generators and t, ordered by token string.
  std::vector<int> alphabet() const;
  long long queue_size() const;
};

// Four points, t = (0 1)(2 3), base pair (0,1) joined by the empty word and
// (1,0) by t; the ten remaining ordered pairs queued lexicographically
// starting at (0,2).
Stage init_stage(unsigned seed = 0);

// Dequeues one pair and joins it. A ledger hit is a no-op; since the ledger
// is the exact orbit, a miss means the pair is genuinely unreachable: a
// t-swapped pair gets a fresh commuting generator, a pair swapped by a
// certified involution (v^{-1} t v for a ledgered word v) is reduced to its
// t-swapped pullback, and anything else gets a fresh free generator. Every
// mint re-extends the ledger with the new orbit growth; a second canonical
// word arriving at an already-joined pair is an integrity failure and
// throws. Throws when the queue is empty.
void process_next_pair(Stage& s);

// Frontier extension: closes commuting constraints, extends every generator
// by a bounded number of fresh image/preimage entries, pairs leftover fresh
// points under t with brand-new partners, enqueues the new pair block, and
// rebuilds the joined ledger as the orbit over the extended maps.
void totalize(Stage& s);

// Alternates joins and totalization (every `cadence` mints) until
// `steps` generators have been minted.
Stage run(long long steps, unsigned seed = 0, int cadence = 1);

struct CheckReport {
  bool pass = true;
  std::vector<std::string> violations;
  long long violation_count = 0;     // includes violations beyond the cap
  long long frobenius_words = 0;
  long long uniqueness_nodes = 0;
  long long coherence_checks = 0;
  std::string to_string() const;
};

// Verifies, over canonical words of letter length <= depth:
//  (a) no word with nontrivial normal form fixes two distinct points,
//  (b) no two distinct normal forms map the base pair to the same pair,
//  (c) t is a total fixed-point-free involution, generators are injective
//      partial maps, commuting squares hold where defined, and every joined
//      ledger word still evaluates to its pair,
//  (d) evaluation is coherent: (p^u)^v = p^(uv) whenever defined, for
//      u, v of length <= ceil(depth/2).
CheckReport check_invariants(const Stage& s, int depth);

// Text snapshot: point count, t line, one sparse line per generator, and the
// joined-pair ledger.
std::string write_snapshot(const Stage& s);

}  // namespace sharply::construct
