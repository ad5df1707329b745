#include "doctest.h"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "sharply/partial_action.hpp"

using namespace sharply::construct;

namespace {

bool has_violation(const CheckReport& r, const std::string& needle) {
  return std::any_of(r.violations.begin(), r.violations.end(),
                     [&](const std::string& v) {
                       return v.find(needle) != std::string::npos;
                     });
}

}  // namespace

TEST_CASE("initial stage: four points, total t, base pair ledgered") {
  Stage s = init_stage();
  CHECK(s.num_points == 4);
  CHECK(s.t_map == std::vector<int>{1, 0, 3, 2});
  CHECK(s.gens.empty());
  CHECK(s.base_pair == std::pair<int, int>{0, 1});
  CHECK(s.joined.size() == 2);
  CHECK(s.joined.at({0, 1}).empty());
  CHECK(s.joined.at({1, 0}) == std::vector<int>{0});
  CHECK(s.queue_size() == 10);
  CHECK(s.step_count == 0);
  CHECK(write_snapshot(s) ==
        "points: 4\n"
        "t: 1 0 3 2\n"
        "joined: 2\n"
        "(0,1) -> 1\n"
        "(1,0) -> t\n");
}

TEST_CASE("single letters apply and unknown letters throw") {
  Stage s = init_stage();
  CHECK(s.apply_letter(0, 0) == 1);
  CHECK(s.apply_letter(0, 2) == 3);
  CHECK_THROWS_AS(s.apply_letter(3, 0), std::invalid_argument);  // no n1 yet
  CHECK_THROWS_AS(s.apply_letter(2, 0), std::invalid_argument);  // no c1 yet

  int gi = s.add_generator(false);
  CHECK(s.gens[gi].name() == "n1");
  CHECK(s.apply_letter(3, 0) == -1);  // defined nowhere yet
}

TEST_CASE("seven joins mint n1, n2, c1 and ledger the exact orbit") {
  Stage s = init_stage();
  for (int i = 0; i < 7; ++i) process_next_pair(s);

  CHECK(s.num_points == 4);
  CHECK(s.gens.size() == 3);
  CHECK(s.step_count == 3);
  CHECK(s.pairs_processed == 7);
  CHECK(s.joined.size() == 12);
  CHECK(s.queue_size() == 3);
  CHECK(s.gens[0].name() == "n1");
  CHECK(s.gens[1].name() == "n2");
  CHECK(s.gens[2].name() == "c1");
  CHECK_FALSE(s.gens[0].commuting);
  CHECK(s.gens[2].commuting);

  CHECK(write_snapshot(s) ==
        "points: 4\n"
        "t: 1 0 3 2\n"
        "n1: 0->0 1->2\n"
        "n2: 0->0 1->3\n"
        "c1: 0->2 1->3\n"
        "joined: 12\n"
        "(0,1) -> 1\n"
        "(0,2) -> n1\n"
        "(0,3) -> n2\n"
        "(1,0) -> t\n"
        "(1,2) -> n2 t\n"
        "(1,3) -> n1 t\n"
        "(2,0) -> t n1\n"
        "(2,1) -> t n2 t\n"
        "(2,3) -> c1\n"
        "(3,0) -> t n2\n"
        "(3,1) -> t n1 t\n"
        "(3,2) -> t c1\n");

  // Alphabet is ordered by token string, t last.
  CHECK(s.alphabet() == std::vector<int>{2, -2, 3, -3, 5, -5, 0});

  // Every ledgered word replays to its pair from the base pair.
  for (const auto& [pair, word] : s.joined) {
    CHECK(s.eval_word(word, 0) == pair.first);
    CHECK(s.eval_word(word, 1) == pair.second);
  }

  // Word evaluation and its inverse agree with the books.
  CHECK(s.eval_word({3}, 1) == 2);
  CHECK(s.eval_word_inverse({3}, 2) == 1);
  CHECK(s.eval_word({2}, 0) == 2);
  CHECK(s.eval_word({2, 2}, 0) == -1);  // c1 undefined at 2
  CHECK(s.eval_word({0, 5, 0}, 0) == 2);

  CHECK(check_invariants(s, 3).pass);
}

TEST_CASE("draining the queue throws on the next pop") {
  Stage s = init_stage();
  for (int i = 0; i < 10; ++i) process_next_pair(s);
  CHECK(s.queue_size() == 0);
  CHECK_THROWS_AS(process_next_pair(s), std::logic_error);
}

TEST_CASE("totalization extends maps, mints partners, re-walks the orbit") {
  Stage s = init_stage();
  for (int i = 0; i < 7; ++i) process_next_pair(s);
  totalize(s);

  CHECK(s.num_points == 24);
  CHECK(static_cast<int>(s.t_map.size()) == s.num_points);
  CHECK(s.joined.size() == 112);
  CHECK(s.queue_size() == 543);

  // t stays a total fixed-point-free involution.
  for (int p = 0; p < s.num_points; ++p) {
    CHECK(s.t_map[p] != p);
    CHECK(s.t_map[s.t_map[p]] == p);
  }

  // Commuting squares hold wherever defined: c(t(p)) = t(c(p)).
  for (const auto& g : s.gens) {
    if (!g.commuting) continue;
    for (int p = 0; p < s.num_points; ++p) {
      int q = g.img[p];
      if (q < 0) continue;
      CHECK(g.img[s.t_map[p]] == s.t_map[q]);
    }
  }

  CHECK(check_invariants(s, 3).pass);
}

TEST_CASE("short runs reproduce frozen trajectories") {
  Stage s1 = run(1, 0);
  CHECK(s1.num_points == 12);
  CHECK(s1.step_count == 1);
  CHECK(s1.joined.size() == 22);

  Stage s5 = run(5, 1);
  CHECK(s5.num_points == 112);
  CHECK(s5.gens.size() == 5);
  CHECK(check_invariants(s5, 3).pass);
}

TEST_CASE("ten-step run matches the frozen statistics") {
  Stage s = run(10, 0);
  CHECK(s.num_points == 408);
  CHECK(s.gens.size() == 10);
  CHECK(s.joined.size() == 3698);

  CheckReport r = check_invariants(s, 3);
  CHECK(r.pass);
  CHECK(r.violation_count == 0);
  CHECK(r.frobenius_words == 6274);
  CHECK(r.uniqueness_nodes == 863);
  CHECK(r.coherence_checks == 319840);
  CHECK(r.to_string() ==
        "pass: true\n"
        "violations: 0\n"
        "frobenius_words: 6274\n"
        "uniqueness_nodes: 863\n"
        "coherence_checks: 319840\n");
}

TEST_CASE("seeds only reorder leftovers, determinism per seed") {
  Stage a = run(5, 7);
  Stage b = run(5, 7);
  CHECK(a.num_points == b.num_points);
  CHECK(a.joined == b.joined);
  CHECK(write_snapshot(a) == write_snapshot(b));
}

TEST_CASE("a free generator fixing two points is a Frobenius violation") {
  Stage s = init_stage();
  int gi = s.add_generator(false);
  s.gens[gi].img[0] = 0;
  s.gens[gi].pre[0] = 0;
  s.gens[gi].img[1] = 1;
  s.gens[gi].pre[1] = 1;

  CheckReport r = check_invariants(s, 2);
  CHECK_FALSE(r.pass);
  CHECK(r.violation_count > 0);
  CHECK(has_violation(r, "(a) word 'n1' fixes points 0 and 1"));
  // The same defect breaks base-pair uniqueness: the empty word and n1 both
  // map the base pair to itself.
  CHECK(has_violation(r, "(b) words '1' and 'n1' both map the base pair"));
}

TEST_CASE("a broken t is reported structurally") {
  Stage s = init_stage();
  s.t_map[0] = 0;
  CheckReport r = check_invariants(s, 1);
  CHECK_FALSE(r.pass);
  CHECK(has_violation(r, "(c) t fixes point 0"));
}

TEST_CASE("a stale ledger word is caught by replay") {
  Stage s = init_stage();
  for (int i = 0; i < 7; ++i) process_next_pair(s);
  auto it = s.joined.find({2, 3});
  REQUIRE(it != s.joined.end());
  it->second = {3};  // n1 does not join (0,1) to (2,3)
  CheckReport r = check_invariants(s, 2);
  CHECK_FALSE(r.pass);
  CHECK(has_violation(r, "(c) ledger word 'n1' does not join pair (2,3)"));
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(run(-1), std::invalid_argument);
  CHECK_THROWS_AS(run(1, 0, 0), std::invalid_argument);
  Stage s = init_stage();
  CHECK_THROWS_AS(check_invariants(s, 0), std::invalid_argument);
}
