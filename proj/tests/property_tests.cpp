#include <doctest.h>

#include <algorithm>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "logsplit/parse.hpp"
#include "logsplit/report.hpp"

using namespace logsplit;

namespace {

Arrangement random_arrangement(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<long> co(-3, 3);
  std::vector<LinForm> lines;
  while (static_cast<int>(lines.size()) < n) {
    LinForm l{rat(co(rng)), rat(co(rng)), rat(co(rng))};
    if (l.is_zero()) continue;
    bool dup = false;
    for (const auto& o : lines) dup = dup || o.same_line(l);
    if (!dup) lines.push_back(l);
  }
  return Arrangement{lines};
}

std::string describe(const Arrangement& a) {
  std::string s;
  for (const auto& l : a.lines) s += l.to_string() + "; ";
  return s;
}

std::string failures(const FullReport& r) {
  std::string s;
  for (const auto& c : r.checks)
    if (!c.passed) s += c.name + " [" + c.witness + "] ";
  return s;
}

}  // namespace

TEST_CASE("random arrangements pass every cross-check") {
  std::mt19937_64 rng(20260816);
  // heavier sampling where analysis is cheap, a tail of larger arrangements
  const std::vector<std::pair<int, int>> plan = {{3, 60}, {4, 50}, {5, 40},
                                                 {6, 30}, {7, 12}, {8, 8}};
  int determinism_budget = 8;
  for (auto [n, count] : plan) {
    for (int i = 0; i < count; ++i) {
      Arrangement a = random_arrangement(rng, n);
      INFO("arrangement: ", describe(a));

      FullReport r = analyze_arrangement(a);
      CHECK_MESSAGE(r.all_passed(), "failing checks: ", failures(r));
      CHECK(r.degree == n);

      int members = 0;
      for (const auto& lr : r.lines) {
        members += lr.member ? 1 : 0;
        CHECK(lr.splitting.d1 + lr.splitting.d2 == n - 1);
        CHECK(lr.splitting.d1 >= 0);
        CHECK(lr.defect >= r.tau + r.nu);
      }
      CHECK(members == n);

      // exact classifications on both sides of a random deletion respect
      // every addition-deletion implication
      AdditionDeletion ad = addition_deletion(a, static_cast<int>(rng() % n));
      for (const auto& im : ad.implications) {
        INFO("implication ", im.name, ": ", im.detail);
        CHECK(im.respected());
      }

      if (n <= 4 && determinism_budget > 0) {
        --determinism_budget;
        FullReport again = analyze_arrangement(a);
        CHECK(report_json(again).dump() == report_json(r).dump());
      }
    }
  }
}

TEST_CASE("multiarrangement exponents move by one under a unit increment") {
  const std::vector<std::array<Int, 2>> pool = {{1, 0}, {0, 1}, {1, 1},  {1, -1},
                                                {2, 1}, {1, 2}, {3, -1}, {1, 3}};
  std::mt19937_64 rng(424242);
  for (int trial = 0; trial < 50; ++trial) {
    int npts = 1 + static_cast<int>(rng() % 5);
    std::vector<int> idx(pool.size());
    for (size_t i = 0; i < pool.size(); ++i) idx[i] = static_cast<int>(i);
    std::shuffle(idx.begin(), idx.end(), rng);
    Multi2D m;
    for (int i = 0; i < npts; ++i)
      m.points.push_back(MultiPoint{pool[idx[i]], 1 + static_cast<int>(rng() % 4)});

    auto e = multi_exponents(m);
    CHECK(e.first + e.second == m.total());
    CHECK(e.first <= e.second);

    Multi2D bumped = m;
    if (npts < static_cast<int>(pool.size()) && rng() % 3 == 0) {
      bumped.points.push_back(MultiPoint{pool[idx[npts]], 1});
    } else {
      bumped.points[rng() % npts].mult += 1;
    }
    auto eb = multi_exponents(bumped);
    CHECK(eb.first + eb.second == m.total() + 1);

    auto sorted_pair = [](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
    bool first_grew = eb == sorted_pair(e.first + 1, e.second);
    bool second_grew = eb == sorted_pair(e.first, e.second + 1);
    INFO("base (", e.first, ",", e.second, ") bumped (", eb.first, ",", eb.second, ")");
    CHECK((first_grew || second_grew));
  }
}

TEST_CASE("curve route and arrangement route agree on random line products") {
  std::mt19937_64 rng(987);
  for (int trial = 0; trial < 12; ++trial) {
    Arrangement a = random_arrangement(rng, 3 + static_cast<int>(rng() % 3));
    CurveAnalyzer c(a.defining_poly());
    CHECK(c.tau() == tau_from_lattice(intersection_lattice(a)));
    FullReport r = analyze_arrangement(a);
    CHECK(r.tau == c.tau());
    CHECK(r.mdr == c.mdr());
    CHECK(r.cls == c.classify());
  }
}
