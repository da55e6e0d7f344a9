#include "support.hpp"

#include <map>

#include "tropknap/conv/engine.hpp"
#include "tropknap/conv/monotone.hpp"
#include "tropknap/conv/naive.hpp"
#include "tropknap/conv/ntt.hpp"
#include "tropknap/conv/residue.hpp"
#include "tropknap/conv/tilde.hpp"
#include "tropknap/harness/generate.hpp"

using namespace tk;
using namespace tk::conv;
using namespace tk::test;

namespace {

constexpr ExtInt kI = ExtInt::pos_inf();
constexpr ExtInt kNI = ExtInt::neg_inf();

ConvOptions forced() {
  ConvOptions o;
  o.mode = ConvOptions::Mode::engine;
  return o;
}

std::vector<std::int64_t> to_raw(const MonotoneSeq& s) {
  std::vector<std::int64_t> r;
  for (ExtInt x : s.values()) r.push_back(x.raw());
  return r;
}

}  // namespace

TEST_CASE("naive min-plus examples") {
  CHECK(raw(minplus_naive(nd({0}), nd({0}))) == std::vector<std::int64_t>{0});
  CHECK(raw(minplus_naive(nd({0, 1}), nd({0, 2}))) == std::vector<std::int64_t>{0, 1, 3});
  auto c = minplus_naive(nd({5, kI}), nd({1, 1}));
  CHECK(c.at(0) == ExtInt(6));
  CHECK(c.at(1) == ExtInt(6));
  CHECK(c.at(2).is_pos_inf());
  auto s = minplus_naive(nd({1}, Sentinel::pos_inf, 3), nd({2}, Sentinel::pos_inf, 4));
  CHECK(s.start() == 7);
}

TEST_CASE("naive max-plus examples and duality") {
  auto m = [](std::initializer_list<ExtInt> v) { return nd(v, Sentinel::neg_inf); };
  CHECK(raw(maxplus_naive(m({0, 1}), m({0, 2}))) == std::vector<std::int64_t>{0, 2, 3});
  CHECK(raw(maxplus_naive(m({0}), m({7}))) == std::vector<std::int64_t>{7});
  auto c = maxplus_naive(m({1, 1}), m({kNI, 0}));
  CHECK(c.at(0).is_neg_inf());
  CHECK(c.at(1) == ExtInt(1));
  CHECK(c.at(2) == ExtInt(1));
  Rng rng{SeedCtx(3)};
  for (int it = 0; it < 200; ++it) {
    std::vector<ExtInt> a(1 + rng.below(8)), b(1 + rng.below(8));
    for (auto* v : {&a, &b})
      for (auto& x : *v) x = rng.below(5) == 0 ? kNI : ExtInt(rng.between(-20, 20));
    auto A = MonotoneSeq(0, a, Direction::unknown, Sentinel::neg_inf);
    auto B = MonotoneSeq(0, b, Direction::unknown, Sentinel::neg_inf);
    auto neg = [](const MonotoneSeq& s) {
      std::vector<ExtInt> v;
      for (ExtInt x : s.values()) v.push_back(-x);
      return MonotoneSeq(s.start(), v, Direction::unknown, Sentinel::pos_inf);
    };
    CHECK(maxplus_naive(A, B).same_entries(neg(minplus_naive(neg(A), neg(B)))));
  }
}

TEST_CASE("exact transforms") {
  std::vector<std::uint32_t> a{1, 2, 3}, b{4, 5};
  auto c = convolve_exact(a, b, 100);
  CHECK(c == std::vector<std::uint64_t>{4, 13, 22, 15});
  Rng rng{SeedCtx(11)};
  for (int it = 0; it < 20; ++it) {
    std::vector<std::uint32_t> x(1 + rng.below(300)), y(1 + rng.below(300));
    for (auto& v : x) v = static_cast<std::uint32_t>(rng.below(1u << 20));
    for (auto& v : y) v = static_cast<std::uint32_t>(rng.below(1u << 20));
    std::vector<std::uint64_t> want(x.size() + y.size() - 1, 0);
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = 0; j < y.size(); ++j) want[i + j] += std::uint64_t{x[i]} * y[j];
    CHECK(convolve_exact(x, y, std::uint64_t{1} << 50) == want);
  }
  // long transform crosses the cache blocking threshold
  std::vector<std::uint32_t> big(70000, 1);
  auto sq = convolve_exact(big, big, 1u << 20);
  CHECK(sq[0] == 1);
  CHECK(sq[69999] == 70000);
  CHECK(sq[139998] == 1);
}

TEST_CASE("three-variable polynomial product") {
  Poly3 p{{{0, 0, 1, 1}}, 1, 2, 3}, q{{{1, 2, 3, 1}}, 1, 2, 3};
  auto r = poly_mult_3var(p, q);
  REQUIRE(r.terms.size() == 1);
  CHECK(r.terms[0].x == 1);
  CHECK(r.terms[0].y == 2);
  CHECK(r.terms[0].z == 4);
  CHECK(r.terms[0].coef == 1);
  Poly3 s{{{0, 1, 1, 1}, {0, 1, 2, 1}}, 0, 1, 2};
  auto sq = poly_mult_3var(s, s);
  std::map<std::int64_t, std::uint64_t> byz;
  for (auto& t : sq.terms) {
    CHECK(t.y == 2);
    byz[t.z] = t.coef;
  }
  CHECK(byz == std::map<std::int64_t, std::uint64_t>{{2, 1}, {3, 2}, {4, 1}});
  Poly3 zero{{}, 1, 2, 3};
  CHECK(poly_mult_3var(zero, q).terms.empty());
  Poly3 bad{{{0, 5, 0, 1}}, 0, 2, 0};
  CHECK_THROWS_AS(poly_mult_3var(bad, bad), std::invalid_argument);
}

TEST_CASE("residue split") {
  auto pairs = residue_split(nd({0}), nd({0}), 7);
  REQUIRE(pairs.size() == 9);
  for (const auto& pr : pairs) {
    bool zero = pr.x == 0 && pr.y == 0;
    CHECK(pr.a_shifted.at(0).finite() == (pr.x == 0));
    CHECK(pr.b_shifted.at(0).finite() == (pr.y == 0));
    if (zero) CHECK(pr.shift_back == 0);
  }
  CHECK(residue_class(3, 7) == 1);
  CHECK(third_ceil(1, 7) == 3);
  auto p2 = residue_split(nd({3}), nd({0}), 7);
  for (const auto& pr : p2)
    if (pr.x == 1) CHECK(pr.a_shifted.at(0) == ExtInt(0));
  // reconstruction: min over the nine shifted products equals the direct product
  for (std::uint64_t s = 0; s < 100; ++s) {
    Rng rng{SeedCtx(s)};
    std::size_t n = 1 + rng.below(64);
    std::int64_t M = 1 + static_cast<std::int64_t>(rng.below(128));
    auto a = harness::random_monotone(n, M, Direction::non_decreasing, Sentinel::pos_inf, SeedCtx(s).child(1), 10);
    auto b = harness::random_monotone(n, M, Direction::non_decreasing, Sentinel::pos_inf, SeedCtx(s).child(2), 10);
    std::int64_t p = sample_prime(M, rng);
    auto want = minplus_naive(a, b);
    std::vector<ExtInt> got(want.size(), kI);
    for (const auto& pr : residue_split(a, b, p)) {
      for (ExtInt e : pr.a_shifted.values())
        if (e.finite()) CHECK(3 * (e.raw() % p) < p);
      auto c = minplus_naive(pr.a_shifted, pr.b_shifted);
      for (std::size_t k = 0; k < got.size(); ++k)
        if (c.values()[k].finite()) got[k] = std::min(got[k], ExtInt(c.values()[k].raw() + pr.shift_back));
    }
    CHECK(got == want.values());
  }
}

TEST_CASE("primes") {
  CHECK(is_prime(2));
  CHECK(is_prime(2013265921));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(561));
  Rng rng{SeedCtx(5)};
  for (std::int64_t M : {1, 4, 100, 10000, 1 << 20}) {
    std::int64_t p = sample_prime(M, rng);
    CHECK(is_prime(static_cast<std::uint64_t>(p)));
    CHECK(p >= 2);
    if (M >= 100) {
      CHECK(p * p >= M);
      CHECK(p * p <= 4 * M);
    }
  }
}

TEST_CASE("tilde convolution examples") {
  CHECK(raw(tilde_convolution(nd({0, 0, 1}), nd({2, 2}))) == std::vector<std::int64_t>{2, 2, 2, 3});
  auto c = tilde_convolution(nd({kI, 0}), nd({0}));
  CHECK(c.at(0).is_pos_inf());
  CHECK(c.at(1) == ExtInt(0));
  CHECK(raw(tilde_convolution(nd({0}), nd({0}))) == std::vector<std::int64_t>{0});
  for (std::uint64_t s = 0; s < 100; ++s) {
    auto a = harness::random_monotone(1 + s % 40, 6, Direction::non_decreasing, Sentinel::pos_inf, SeedCtx(s).child(1), 15);
    auto b = harness::random_monotone(1 + s % 23, 6, Direction::non_decreasing, Sentinel::pos_inf, SeedCtx(s).child(2), 15);
    CHECK(tilde_convolution(a, b).same_entries(minplus_naive(a, b)));
  }
}

TEST_CASE("chmin tree") {
  ChminTree t(10);
  t.chmin(2, 5, 7);
  t.chmin(4, 9, 3);
  t.chmin(0, 0, 1);
  auto v = t.collect();
  CHECK(v[0] == 1);
  CHECK(v[1] == ExtInt::kPosInf);
  CHECK(v[3] == 7);
  CHECK(v[4] == 3);
  CHECK(v[9] == 3);
}

TEST_CASE("monotone min-plus examples") {
  std::vector<ExtInt> ramp;
  for (int i = 0; i < 16; ++i) ramp.push_back(i);
  auto r = MonotoneSeq(0, ramp, Direction::non_decreasing, Sentinel::pos_inf);
  auto c = monotone_minplus_rect(r, r, 15, SeedCtx(1), forced());
  for (std::int64_t k = 0; k < 31; ++k) CHECK(c.at(k) == ExtInt(k));
  auto cc = monotone_minplus_rect(nd({3, 3, 3}), nd({4, 4}), 4, SeedCtx(2), forced());
  CHECK(raw(cc) == std::vector<std::int64_t>{7, 7, 7, 7});
  CHECK(cc.direction() == Direction::non_decreasing);
  CHECK_THROWS_AS(monotone_minplus_rect(nd({0, 9}), nd({0}), 4, SeedCtx(1)), std::out_of_range);
  CHECK_THROWS_AS(monotone_minplus_rect(nd({0}), nd({0}).with_direction(Direction::non_increasing), 4, SeedCtx(1)),
                  std::invalid_argument);
}

TEST_CASE("monotone max-plus examples") {
  auto m = [](std::initializer_list<ExtInt> v) { return nd(v, Sentinel::neg_inf); };
  CHECK(raw(monotone_maxplus_rect(m({0, 1}), m({0, 2}), 2, SeedCtx(1), forced())) ==
        std::vector<std::int64_t>{0, 2, 3});
  CHECK(raw(monotone_maxplus_rect(m({1, 1, 1}), m({2, 2}), 2, SeedCtx(1), forced())) ==
        std::vector<std::int64_t>{3, 3, 3, 3});
}

TEST_CASE("engine agrees with the naive product in every mode") {
  using Mode = ConvOptions::Mode;
  for (std::uint64_t s = 0; s < 60; ++s) {
    Rng rng{SeedCtx(s)};
    std::size_t n = 1 + rng.below(120);
    std::int64_t M = 1 + static_cast<std::int64_t>(rng.below(600));
    Direction d = s % 2 ? Direction::non_increasing : Direction::non_decreasing;
    auto a = harness::random_monotone(n, M, d, Sentinel::pos_inf, SeedCtx(s).child(1), static_cast<int>(s % 3) * 10);
    auto b = harness::random_monotone(1 + rng.below(120), M, d, Sentinel::pos_inf, SeedCtx(s).child(2),
                                      static_cast<int>(s % 4) * 5);
    auto want = minplus_naive(a, b);
    for (Mode mode : {Mode::engine, Mode::counting, Mode::naive, Mode::automatic}) {
      ConvOptions o;
      o.mode = mode;
      CHECK(monotone_minplus_rect(a, b, M, SeedCtx(s).child(3), o).same_entries(want));
    }
    auto am = harness::random_monotone(n, M, d, Sentinel::neg_inf, SeedCtx(s).child(4), 10);
    auto bm = harness::random_monotone(n, M, d, Sentinel::neg_inf, SeedCtx(s).child(5), 10);
    CHECK(monotone_maxplus_rect(am, bm, M, SeedCtx(s).child(6), forced()).same_entries(maxplus_naive(am, bm)));
  }
}

TEST_CASE("max-plus reversal symmetry") {
  for (std::uint64_t s = 0; s < 30; ++s) {
    std::size_t n = 1 + s % 17;
    auto a = harness::random_monotone(n, 50, Direction::non_decreasing, Sentinel::neg_inf, SeedCtx(s).child(1));
    auto b = harness::random_monotone(n, 50, Direction::non_decreasing, Sentinel::neg_inf, SeedCtx(s).child(2));
    auto c = monotone_maxplus_rect(a, b, 50, SeedCtx(s), forced());
    auto ra = reverse_index(a).shifted_index(static_cast<std::int64_t>(n) - 1);
    auto rb = reverse_index(b).shifted_index(static_cast<std::int64_t>(n) - 1);
    auto rc = monotone_maxplus_rect(ra, rb, 50, SeedCtx(s), forced());
    for (std::int64_t k = 0; k <= 2 * static_cast<std::int64_t>(n) - 2; ++k)
      CHECK(c.at(k) == rc.at(2 * static_cast<std::int64_t>(n) - 2 - k));
  }
}

TEST_CASE("engine intermediate levels bracket the residue of the answer") {
  // For every k, level l and finite C: floor((C mod p - 2(2^l - 1)) / 2^l)
  // <= C^(l)[k] <= floor((C mod p + 2(2^l - 1)) / 2^l), where C is the product
  // of the pair's shifted inputs.
  for (std::uint64_t s = 0; s < 6; ++s) {
    Rng rng{SeedCtx(s)};
    std::size_t n = 32 + rng.below(97);
    std::int64_t M = 64 + static_cast<std::int64_t>(rng.below(2000));
    auto a = to_raw(harness::random_monotone(n, M, Direction::non_decreasing, Sentinel::pos_inf, SeedCtx(s).child(1), 5));
    auto b = to_raw(harness::random_monotone(n, M, Direction::non_decreasing, Sentinel::pos_inf, SeedCtx(s).child(2), 5));
    std::map<int, std::vector<std::int64_t>> exact;  // per pair
    int checked = 0, failed = 0, contained_fail = 0;
    // segments of the previous level per (pair, k)
    std::map<std::pair<int, std::int64_t>, std::vector<SegmentView>> prev;
    EngineTrace trace;
    trace.on_level = [&](const LevelEvent& ev) {
      auto& c = exact[ev.pair];
      if (c.empty()) {
        const auto& x = *ev.a_shifted;
        const auto& y = *ev.b_shifted;
        c.assign(x.size() + y.size() - 1, kInf);
        for (std::size_t i = 0; i < x.size(); ++i)
          for (std::size_t j = 0; j < y.size(); ++j)
            if (x[i] != kInf && y[j] != kInf) c[i + j] = std::min(c[i + j], x[i] + y[j]);
      }
      std::int64_t ck = c[static_cast<std::size_t>(ev.k)];
      auto key = std::make_pair(ev.pair, ev.k);
      if (ev.level < ev.top_level) {
        const std::int64_t two = std::int64_t{1} << ev.level;
        const std::int64_t r = ck % ev.p;
        auto fl = [](std::int64_t x, std::int64_t d) { return x >= 0 ? x / d : -((-x + d - 1) / d); };
        ++checked;
        if (ev.c_level < fl(r - 2 * (two - 1), two) || ev.c_level > fl(r + 2 * (two - 1), two)) ++failed;
        // containment: each new segment lies inside one of the previous level
        for (const auto& sg : *ev.segments) {
          bool inside = false;
          for (const auto& up : prev[key]) inside |= up.i1 <= sg.i1 && sg.i2 <= up.i2;
          if (!inside) ++contained_fail;
        }
      }
      prev[key] = *ev.segments;
    };
    EngineStats st;
    auto out = minplus_engine(a, b, M, SeedCtx(s).child(3), &st, &trace);
    auto want = to_raw(minplus_naive(harness::random_monotone(n, M, Direction::non_decreasing, Sentinel::pos_inf,
                                                              SeedCtx(s).child(1), 5),
                                      harness::random_monotone(n, M, Direction::non_decreasing, Sentinel::pos_inf,
                                                               SeedCtx(s).child(2), 5)));
    CHECK(out == want);
    CHECK(checked > 0);
    CHECK(failed == 0);
    CHECK(contained_fail == 0);
    CHECK(st.max_infinity_runs <= static_cast<std::size_t>(10 * n));
  }
}

TEST_CASE("engine with a caller prime") {
  std::vector<std::int64_t> a{0, 1, 1, 5, 9}, b{2, 2, 3, kInf, 7};
  auto naive = to_raw(minplus_naive(MonotoneSeq(0, {0, 1, 1, 5, 9}, Direction::non_decreasing, Sentinel::pos_inf),
                                    MonotoneSeq(0, {2, 2, 3, kI, 7}, Direction::non_decreasing, Sentinel::pos_inf)));
  for (std::int64_t p : {2, 3, 5, 7, 11, 13})
    CHECK(minplus_engine_with_prime(a, b, p) == naive);
  CHECK_THROWS_AS(minplus_engine_with_prime(a, b, 4), std::invalid_argument);
  CHECK_THROWS_AS(minplus_engine_with_prime({3, 1}, b, 5), std::invalid_argument);
}

TEST_CASE("one-monotone max-plus") {
  auto a = MonotoneSeq(0, {0, 0, 0}, Direction::non_decreasing, Sentinel::neg_inf);
  auto b = MonotoneSeq(0, {3, 1, 2}, Direction::unknown, Sentinel::neg_inf);
  CHECK(raw(one_monotone_maxplus(a, b, 3, SeedCtx(1), forced())) == std::vector<std::int64_t>{3, 3, 3, 2, 2});
  for (std::uint64_t s = 0; s < 100; ++s) {
    Rng rng{SeedCtx(s)};
    std::size_t n = 1 + rng.below(90);
    std::int64_t M = 1 + static_cast<std::int64_t>(rng.below(100));
    auto x = harness::random_monotone(n, M, Direction::non_decreasing, Sentinel::neg_inf, SeedCtx(s).child(1));
    auto y = harness::random_arbitrary(1 + rng.below(90), M, SeedCtx(s).child(2));
    CHECK(one_monotone_maxplus(x, y, M, SeedCtx(s).child(3)).same_entries(maxplus_naive(x, y)));
    auto ym = harness::random_monotone(n, M, Direction::non_decreasing, Sentinel::neg_inf, SeedCtx(s).child(4));
    CHECK(one_monotone_maxplus(x, ym, M, SeedCtx(s).child(5))
              .same_entries(monotone_maxplus_rect(x, ym, M, SeedCtx(s).child(6))));
  }
  CHECK_THROWS_AS(one_monotone_maxplus(b, a, 3, SeedCtx(1)), std::invalid_argument);
}
