#include "sharply/partial_action.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "sharply/free_product.hpp"

namespace sharply::construct {

using freeprod::fp_from_letters;
using freeprod::fp_letters;
using freeprod::fp_multiply;
using freeprod::kNoLetter;
using freeprod::letter_allowed;
using freeprod::letter_token;

std::string GenMap::name() const {
  return (commuting ? "c" : "n") + std::to_string(index);
}

int Stage::new_point() {
  t_map.push_back(-1);
  for (auto& g : gens) {
    g.img.push_back(-1);
    g.pre.push_back(-1);
  }
  return num_points++;
}

int Stage::add_generator(bool commuting) {
  GenMap g;
  g.commuting = commuting;
  g.index = commuting ? next_c++ : next_n++;
  g.letter = commuting ? 2 * g.index : 2 * g.index + 1;
  g.img.assign(num_points, -1);
  g.pre.assign(num_points, -1);
  auto& slots = commuting ? c_slots : n_slots;
  if (static_cast<int>(slots.size()) < g.index) slots.resize(g.index, -1);
  slots[g.index - 1] = static_cast<int>(gens.size());
  gens.push_back(std::move(g));
  return static_cast<int>(gens.size()) - 1;
}

int Stage::apply_letter(int code, int p) const {
  if (p < 0 || p >= num_points) return -1;
  if (code == 0) return t_map[p];
  int abscode = code < 0 ? -code : code;
  bool is_c = abscode % 2 == 0;
  int k = is_c ? abscode / 2 : (abscode - 1) / 2;
  const auto& slots = is_c ? c_slots : n_slots;
  if (k < 1 || k > static_cast<int>(slots.size()) || slots[k - 1] < 0)
    throw std::invalid_argument("apply_letter: unknown generator letter " +
                                std::to_string(code));
  const GenMap& g = gens[slots[k - 1]];
  return code > 0 ? g.img[p] : g.pre[p];
}

int Stage::eval_word(const std::vector<int>& letters, int p) const {
  int cur = p;
  for (int code : letters) {
    if (cur < 0) return -1;
    cur = apply_letter(code, cur);
  }
  return cur;
}

int Stage::eval_word_inverse(const std::vector<int>& letters, int p) const {
  int cur = p;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    if (cur < 0) return -1;
    cur = apply_letter(-*it, cur);
  }
  return cur;
}

std::vector<int> Stage::alphabet() const {
  std::vector<int> letters;
  letters.push_back(0);
  for (const auto& g : gens) {
    letters.push_back(g.letter);
    letters.push_back(-g.letter);
  }
  std::sort(letters.begin(), letters.end(), [](int a, int b) {
    return letter_token(a) < letter_token(b);
  });
  return letters;
}

long long Stage::queue_size() const {
  long long n = static_cast<long long>(queue_head.size());
  for (const auto& b : queue_blocks) n += b.remaining;
  return n;
}

namespace {

std::string word_str(const std::vector<int>& letters) {
  if (letters.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) s += ' ';
    s += letter_token(letters[i]);
  }
  return s;
}

void block_advance(PairBlock& blk) {
  while (blk.a < blk.hi) {
    ++blk.b;
    int bmin = blk.a < blk.lo ? blk.lo : 0;
    if (blk.b < bmin) blk.b = bmin;
    if (blk.b >= blk.hi) {
      ++blk.a;
      blk.b = -1;
      continue;
    }
    if (blk.b == blk.a) continue;
    return;
  }
}

std::optional<std::pair<int, int>> pop_next_pair(Stage& s) {
  if (!s.queue_head.empty()) {
    auto p = s.queue_head.front();
    s.queue_head.pop_front();
    return p;
  }
  while (!s.queue_blocks.empty()) {
    PairBlock& blk = s.queue_blocks.front();
    if (blk.remaining <= 0 || blk.a >= blk.hi) {
      s.queue_blocks.pop_front();
      continue;
    }
    std::pair<int, int> out{blk.a, blk.b};
    --blk.remaining;
    block_advance(blk);
    return out;
  }
  return std::nullopt;
}

// Breadth-first ledger growth: explores canonical continuations of the
// frontier pairs' words over the current alphabet, recording the first
// canonical word reaching each new pair. In a relation-free state the
// canonical orbit of the base pair is a tree (canonicity quotients the
// commuting squares, and every other edge has a fresh endpoint), so a
// second canonical word arriving at an already-ledgered pair witnesses a
// genuine relation and throws.
void orbit_extend(Stage& s, std::deque<std::pair<int, int>> frontier) {
  std::vector<int> alpha = s.alphabet();
  while (!frontier.empty()) {
    auto [a, b] = frontier.front();
    frontier.pop_front();
    std::vector<int> word = s.joined.at({a, b});
    int last = word.empty() ? kNoLetter : word.back();
    for (int code : alpha) {
      if (!letter_allowed(last, code)) continue;
      int na = s.apply_letter(code, a);
      if (na < 0) continue;
      int nb = s.apply_letter(code, b);
      if (nb < 0) continue;
      word.push_back(code);
      auto [it, inserted] = s.joined.try_emplace(std::make_pair(na, nb), word);
      if (inserted)
        frontier.emplace_back(na, nb);
      else if (it->second != word)
        throw std::runtime_error(
            "join integrity: words '" + word_str(it->second) + "' and '" +
            word_str(word) + "' both join the base pair to (" +
            std::to_string(na) + "," + std::to_string(nb) + ")");
      word.pop_back();
    }
  }
}

// Rebuilds the ledger from scratch as the full canonical-word orbit of the
// base pair over the current partial maps.
void recompute_orbit(Stage& s) {
  s.joined.clear();
  s.joined.try_emplace(s.base_pair, std::vector<int>{});
  orbit_extend(s, {s.base_pair});
}

int mint_generator(Stage& s, int w, int z, bool commuting) {
  int gi = s.add_generator(commuting);
  GenMap& g = s.gens[gi];
  int x = s.base_pair.first, y = s.base_pair.second;
  g.img[x] = w;
  g.pre[w] = x;
  if (g.img[y] != -1 || g.pre[z] != -1)
    throw std::runtime_error("mint: base images collide for " + g.name());
  g.img[y] = z;
  g.pre[z] = y;
  bool fwd = s.joined.try_emplace({w, z}, std::vector<int>{g.letter}).second;
  bool swp = s.joined.try_emplace({z, w}, std::vector<int>{0, g.letter}).second;
  if (!fwd || !swp)
    throw std::logic_error("mint: target pair already joined for " + g.name());
  ++s.step_count;
  orbit_extend(s, {{w, z}, {z, w}});
  return gi;
}

// Joins (w,z) to the base pair: ledger hit (a no-op — the ledger is the
// exact orbit, so a miss means unreachable), direct t-swap (fresh commuting
// generator), certified-involution reduction, or a fresh free generator.
// Certified involutions are the words j = v^{-1} t v for ledgered v; z = w^j
// reduces (w,z) to the t-swapped pair (w^{v^{-1}}, z^{v^{-1}}), whose
// commuting mint must then reach (w,z) through the ledger growth itself.
void join_pair(Stage& s, int w, int z, bool allow_certificates) {
  if (s.joined.count({w, z})) return;
  if (s.t_map[w] == z) {
    mint_generator(s, w, z, true);
    return;
  }
  if (allow_certificates) {
    for (const auto& [key, v] : s.joined) {
      int w0 = s.eval_word_inverse(v, w);
      if (w0 < 0) continue;
      int z0 = s.eval_word_inverse(v, z);
      if (z0 < 0) continue;
      if (s.t_map[w0] != z0) continue;
      join_pair(s, w0, z0, false);
      if (!s.joined.count({w, z}))
        throw std::logic_error(
            "join: certified reduction did not cascade to the target pair");
      return;
    }
  }
  mint_generator(s, w, z, false);
}

}  // namespace

Stage init_stage(unsigned seed) {
  Stage s;
  s.rng_seed = seed;
  for (int i = 0; i < 4; ++i) s.new_point();
  s.t_map = {1, 0, 3, 2};
  s.joined[{0, 1}] = {};
  s.joined[{1, 0}] = {0};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      if (a == b || (a == 0 && b == 1) || (a == 1 && b == 0)) continue;
      s.queue_head.push_back({a, b});
    }
  return s;
}

void process_next_pair(Stage& s) {
  auto pr = pop_next_pair(s);
  if (!pr) throw std::logic_error("process_next_pair: pair queue is empty");
  join_pair(s, pr->first, pr->second, true);
  ++s.pairs_processed;
}

void totalize(Stage& s) {
  int n_old = s.num_points;

  // Phase 1: close commuting constraints; (p^t)^c is forced to (p^c)^t.
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& g : s.gens) {
      if (!g.commuting) continue;
      for (int p = 0; p < s.num_points; ++p) {
        if (g.img[p] < 0) continue;
        int tp = s.t_map[p];
        if (tp < 0) continue;
        int expected = s.t_map[g.img[p]];
        if (expected < 0) continue;
        if (g.img[tp] == expected) continue;
        if (g.img[tp] != -1 || g.pre[expected] != -1)
          throw std::runtime_error("totalize: commuting closure clash on " +
                                   g.name());
        g.img[tp] = expected;
        g.pre[expected] = tp;
        changed = true;
      }
    }
  }

  std::vector<int> leftovers;
  auto fresh_t_pair = [&s](int& q1, int& q2) {
    q1 = s.new_point();
    q2 = s.new_point();
    s.t_map[q1] = q2;
    s.t_map[q2] = q1;
  };

  // Phase 2: bounded frontier extension per generator, activation order.
  // Commuting generators grow by whole t-orbits (targets t-paired at birth,
  // sound because c and t commute); free generators grow by single entries
  // whose fresh endpoints get t-partners in phase 3.
  std::size_t gen_count = s.gens.size();
  for (std::size_t gi = 0; gi < gen_count; ++gi) {
    GenMap& g = s.gens[gi];
    if (g.commuting) {
      int p = -1;
      for (int i = 0; i < s.num_points; ++i)
        if (g.img[i] < 0 && s.t_map[i] >= 0) {
          p = i;
          break;
        }
      if (p >= 0) {
        int tp = s.t_map[p];
        if (g.img[tp] != -1)
          throw std::runtime_error("totalize: half-defined commuting orbit on " +
                                   g.name());
        int q1, q2;
        fresh_t_pair(q1, q2);
        g.img[p] = q1;
        g.pre[q1] = p;
        g.img[tp] = q2;
        g.pre[q2] = tp;
      }
      int u = -1;
      for (int i = 0; i < s.num_points; ++i)
        if (g.pre[i] < 0 && s.t_map[i] >= 0) {
          u = i;
          break;
        }
      if (u >= 0) {
        int tu = s.t_map[u];
        if (g.pre[tu] != -1)
          throw std::runtime_error(
              "totalize: half-defined commuting preimage orbit on " + g.name());
        int r1, r2;
        fresh_t_pair(r1, r2);
        g.img[r1] = u;
        g.pre[u] = r1;
        g.img[r2] = tu;
        g.pre[tu] = r2;
      }
    } else {
      for (int e = 0; e < 2; ++e) {
        int p = -1;
        for (int i = 0; i < s.num_points; ++i)
          if (g.img[i] < 0) {
            p = i;
            break;
          }
        if (p < 0) break;
        int q = s.new_point();
        g.img[p] = q;
        g.pre[q] = p;
        leftovers.push_back(q);
      }
      for (int e = 0; e < 2; ++e) {
        int u = -1;
        for (int i = 0; i < s.num_points; ++i)
          if (g.pre[i] < 0) {
            u = i;
            break;
          }
        if (u < 0) break;
        int r = s.new_point();
        g.img[r] = u;
        g.pre[u] = r;
        leftovers.push_back(r);
      }
    }
  }

  // Phase 3: leftover fresh points get brand-new t-partners (never each
  // other: pairing two action-reachable fresh points under t would create a
  // second short word joining an already-joined pair). The seed only shuffles
  // allocation order.
  if (!leftovers.empty()) {
    if (s.rng_seed != 0) {
      std::mt19937 rng(s.rng_seed * 1000003u +
                       static_cast<unsigned>(s.step_count));
      std::shuffle(leftovers.begin(), leftovers.end(), rng);
    }
    for (int f : leftovers) {
      int f2 = s.new_point();
      s.t_map[f] = f2;
      s.t_map[f2] = f;
    }
  }

  // Phase 4: enqueue all ordered pairs touching a new point.
  if (s.num_points > n_old) {
    PairBlock blk;
    blk.lo = n_old;
    blk.hi = s.num_points;
    blk.a = 0;
    blk.b = -1;
    blk.remaining = static_cast<long long>(blk.hi) * (blk.hi - 1) -
                    static_cast<long long>(blk.lo) * (blk.lo - 1);
    block_advance(blk);
    s.queue_blocks.push_back(blk);
  }

  // Phase 5: the extended maps may join pairs that were unreachable before,
  // so rebuild the ledger; join misses must keep meaning unreachable.
  recompute_orbit(s);
}

Stage run(long long steps, unsigned seed, int cadence) {
  if (steps < 0) throw std::invalid_argument("run: steps must be >= 0");
  if (cadence < 1) throw std::invalid_argument("run: cadence must be >= 1");
  Stage s = init_stage(seed);
  long long since = 0;
  while (s.step_count < steps) {
    auto pr = pop_next_pair(s);
    if (!pr) {
      int before = s.num_points;
      totalize(s);
      if (s.num_points == before && s.queue_size() == 0)
        throw std::logic_error("run: queue exhausted and nothing to extend");
      continue;
    }
    long long before = s.step_count;
    join_pair(s, pr->first, pr->second, true);
    ++s.pairs_processed;
    if (s.step_count > before) {
      since += s.step_count - before;
      if (since >= cadence) {
        totalize(s);
        since = 0;
      }
    }
  }
  return s;
}

namespace {

struct ViolationSink {
  CheckReport& rep;
  static constexpr int kMaxListed = 25;
  void add(std::string msg) {
    ++rep.violation_count;
    rep.pass = false;
    if (static_cast<int>(rep.violations.size()) < kMaxListed)
      rep.violations.push_back(std::move(msg));
  }
};

}  // namespace

CheckReport check_invariants(const Stage& s, int depth) {
  if (depth < 1)
    throw std::invalid_argument("check_invariants: depth must be >= 1");
  CheckReport rep;
  ViolationSink sink{rep};
  std::vector<int> alpha = s.alphabet();

  // (c) structural checks.
  for (int p = 0; p < s.num_points; ++p) {
    int tp = s.t_map[p];
    if (tp < 0 || tp >= s.num_points) {
      sink.add("(c) t undefined at point " + std::to_string(p));
      continue;
    }
    if (tp == p)
      sink.add("(c) t fixes point " + std::to_string(p));
    else if (s.t_map[tp] != p)
      sink.add("(c) t not an involution at point " + std::to_string(p));
  }
  for (const auto& g : s.gens) {
    for (int p = 0; p < s.num_points; ++p) {
      int q = g.img[p];
      if (q < 0) continue;
      if (q >= s.num_points || g.pre[q] != p)
        sink.add("(c) " + g.name() + " image/preimage books disagree at point " +
                 std::to_string(p));
    }
    for (int q = 0; q < s.num_points; ++q) {
      int p = g.pre[q];
      if (p < 0) continue;
      if (p >= s.num_points || g.img[p] != q)
        sink.add("(c) " + g.name() + " preimage/image books disagree at point " +
                 std::to_string(q));
    }
    if (g.commuting) {
      for (int p = 0; p < s.num_points; ++p) {
        if (g.img[p] < 0) continue;
        int tp = s.t_map[p];
        if (tp < 0 || g.img[tp] < 0) continue;
        if (s.t_map[g.img[p]] != g.img[tp])
          sink.add("(c) commuting square fails for " + g.name() + " at point " +
                   std::to_string(p));
      }
    }
  }
  for (const auto& [key, word] : s.joined) {
    if (s.eval_word(word, s.base_pair.first) != key.first ||
        s.eval_word(word, s.base_pair.second) != key.second)
      sink.add("(c) ledger word '" + word_str(word) + "' does not join pair (" +
               std::to_string(key.first) + "," + std::to_string(key.second) +
               ")");
  }

  // (b) uniqueness: distinct normal forms must move the base pair to
  // distinct pairs. Canonical words are in bijection with normal forms, so
  // any collision in this DFS is a violation.
  {
    std::map<std::pair<int, int>, std::vector<int>> seen;
    std::vector<int> cur;
    std::function<void(int, int)> dfs = [&](int a, int b) {
      ++rep.uniqueness_nodes;
      auto [it, inserted] = seen.try_emplace(std::make_pair(a, b), cur);
      if (!inserted && it->second != cur)
        sink.add("(b) words '" + word_str(it->second) + "' and '" +
                 word_str(cur) + "' both map the base pair to (" +
                 std::to_string(a) + "," + std::to_string(b) + ")");
      if (static_cast<int>(cur.size()) >= depth) return;
      int last = cur.empty() ? kNoLetter : cur.back();
      for (int code : alpha) {
        if (!letter_allowed(last, code)) continue;
        int na = s.apply_letter(code, a);
        if (na < 0) continue;
        int nb = s.apply_letter(code, b);
        if (nb < 0) continue;
        cur.push_back(code);
        dfs(na, nb);
        cur.pop_back();
      }
    };
    dfs(s.base_pair.first, s.base_pair.second);
  }

  // (a) Frobenius at depth: no nontrivial normal form fixes two points.
  // Meet in the middle: forward prefixes of length <= H from p, backward
  // suffixes of length <= depth-H ending at p, joined at the cut.
  {
    int H = (depth + 1) / 2;
    std::map<std::vector<int>, int> first_fix;
    auto record_fixed = [&](const std::vector<int>& w, int p) {
      auto [it, inserted] = first_fix.try_emplace(w, p);
      if (!inserted && it->second != p)
        sink.add("(a) word '" + word_str(w) + "' fixes points " +
                 std::to_string(it->second) + " and " + std::to_string(p));
    };
    for (int p = 0; p < s.num_points; ++p) {
      std::vector<std::pair<std::vector<int>, int>> cut;  // (prefix, image)
      std::vector<int> ucur;
      std::function<void(int)> fwd = [&](int q) {
        if (!ucur.empty()) {
          ++rep.frobenius_words;
          if (q == p) record_fixed(ucur, p);
          if (static_cast<int>(ucur.size()) == H) cut.push_back({ucur, q});
        }
        if (static_cast<int>(ucur.size()) >= H) return;
        int last = ucur.empty() ? kNoLetter : ucur.back();
        for (int code : alpha) {
          if (!letter_allowed(last, code)) continue;
          int nq = s.apply_letter(code, q);
          if (nq < 0) continue;
          ucur.push_back(code);
          fwd(nq);
          ucur.pop_back();
        }
      };
      fwd(p);
      if (depth > H && !cut.empty()) {
        // Backward: canonical words v with q^v = p, built right to left.
        std::map<int, std::vector<std::vector<int>>> by_source;
        std::vector<int> vcur;
        std::function<void(int)> bwd = [&](int src) {
          if (!vcur.empty()) by_source[src].push_back(vcur);
          if (static_cast<int>(vcur.size()) >= depth - H) return;
          for (int code : alpha) {
            if (!vcur.empty() && !letter_allowed(code, vcur.front())) continue;
            int nsrc = s.apply_letter(-code, src);
            if (nsrc < 0) continue;
            vcur.insert(vcur.begin(), code);
            bwd(nsrc);
            vcur.erase(vcur.begin());
          }
        };
        bwd(p);
        for (const auto& [u, q] : cut) {
          auto it = by_source.find(q);
          if (it == by_source.end()) continue;
          for (const auto& v : it->second) {
            if (!letter_allowed(u.back(), v.front())) continue;
            std::vector<int> w = u;
            w.insert(w.end(), v.begin(), v.end());
            ++rep.frobenius_words;
            record_fixed(w, p);
          }
        }
      }
    }
  }

  // (d) partial-action coherence for canonical halves.
  {
    int H = (depth + 1) / 2;
    for (int p = 0; p < s.num_points; ++p) {
      std::vector<int> ucur;
      std::function<void(int)> du = [&](int q) {
        if (!ucur.empty()) {
          std::vector<int> vcur;
          std::function<void(int)> dv = [&](int r) {
            if (!vcur.empty()) {
              auto prod =
                  fp_multiply(fp_from_letters(ucur), fp_from_letters(vcur));
              std::vector<int> w = fp_letters(prod);
              int rr = s.eval_word(w, p);
              ++rep.coherence_checks;
              if (rr >= 0 && rr != r)
                sink.add("(d) coherence fails at point " + std::to_string(p) +
                         " for u='" + word_str(ucur) + "', v='" +
                         word_str(vcur) + "'");
            }
            if (static_cast<int>(vcur.size()) >= H) return;
            int last = vcur.empty() ? kNoLetter : vcur.back();
            for (int code : alpha) {
              if (!letter_allowed(last, code)) continue;
              int nr = s.apply_letter(code, r);
              if (nr < 0) continue;
              vcur.push_back(code);
              dv(nr);
              vcur.pop_back();
            }
          };
          dv(q);
        }
        if (static_cast<int>(ucur.size()) >= H) return;
        int last = ucur.empty() ? kNoLetter : ucur.back();
        for (int code : alpha) {
          if (!letter_allowed(last, code)) continue;
          int nq = s.apply_letter(code, q);
          if (nq < 0) continue;
          ucur.push_back(code);
          du(nq);
          ucur.pop_back();
        }
      };
      du(p);
    }
  }

  return rep;
}

std::string CheckReport::to_string() const {
  std::ostringstream out;
  out << "pass: " << (pass ? "true" : "false") << "\n";
  out << "violations: " << violation_count << "\n";
  out << "frobenius_words: " << frobenius_words << "\n";
  out << "uniqueness_nodes: " << uniqueness_nodes << "\n";
  out << "coherence_checks: " << coherence_checks << "\n";
  for (const auto& v : violations) out << "violation: " << v << "\n";
  return out.str();
}

std::string write_snapshot(const Stage& s) {
  std::ostringstream out;
  out << "points: " << s.num_points << "\n";
  out << "t:";
  for (int p = 0; p < s.num_points; ++p) out << ' ' << s.t_map[p];
  out << "\n";
  for (const auto& g : s.gens) {
    out << g.name() << ":";
    for (int p = 0; p < s.num_points; ++p)
      if (g.img[p] >= 0) out << ' ' << p << "->" << g.img[p];
    out << "\n";
  }
  out << "joined: " << s.joined.size() << "\n";
  for (const auto& [key, word] : s.joined)
    out << "(" << key.first << "," << key.second << ") -> " << word_str(word)
        << "\n";
  return out.str();
}

}  // namespace sharply::construct
