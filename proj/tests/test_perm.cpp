#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "cmaps/perm.hpp"

using namespace cmaps;

TEST_CASE("compose follows outer-after-inner") {
  Perm id3 = Perm::identity_n(3);
  Perm p = Perm::from_cycles(id3.ground(), {{0, 1, 2}});
  Perm q = Perm::from_cycles(id3.ground(), {{0, 1}});

  CHECK(compose(id3, p) == p);
  CHECK(compose(p, p.inverse()) == id3);

  Perm r = compose(p, q);
  CHECK(r(0) == 2);
  CHECK(r(1) == 1);
  CHECK(r(2) == 0);
  CHECK(perm_to_string(r) == "(0 2)(1)");
}

TEST_CASE("compose rejects mismatched ground sets") {
  CHECK_THROWS_AS(compose(Perm::identity_n(3), Perm::identity_n(4)),
                  std::invalid_argument);
}

TEST_CASE("cycles are canonical") {
  Perm id3 = Perm::identity_n(3);
  CHECK(id3.cycles() == std::vector<std::vector<int>>{{0}, {1}, {2}});

  Perm invol = Perm::from_cycles(Perm::identity_n(4).ground(), {{0, 1}, {2, 3}});
  CHECK(invol.cycles() == std::vector<std::vector<int>>{{0, 1}, {2, 3}});
  CHECK(perm_to_string(invol) == "(0 1)(2 3)");

  Perm full = Perm::from_cycles(Perm::identity_n(4).ground(), {{0, 1, 2, 3}});
  CHECK(full.cycles() == std::vector<std::vector<int>>{{0, 1, 2, 3}});

  // cycle output rotated to start at the minimum flag
  Perm rot = Perm::from_cycles(Perm::identity_n(4).ground(), {{2, 3, 0, 1}});
  CHECK(rot.cycles() == std::vector<std::vector<int>>{{0, 1, 2, 3}});
}

TEST_CASE("restrict iterates until landing in the subset") {
  Perm four = Perm::from_cycles(Perm::identity_n(4).ground(), {{0, 1, 2, 3}});
  CHECK(four.restrict_to({0, 1, 2, 3}) == four);

  Perm r = four.restrict_to({0, 2});
  CHECK(r.ground() == std::vector<int>{0, 2});
  CHECK(r(0) == 2);
  CHECK(r(2) == 0);

  Perm s = four.restrict_to({1});
  CHECK(s.ground() == std::vector<int>{1});
  CHECK(s(1) == 1);

  CHECK(four.restrict_to({}).size() == 0);
}

TEST_CASE("cut_out fixes everything outside the subset") {
  Perm four = Perm::from_cycles(Perm::identity_n(4).ground(), {{0, 1, 2, 3}});
  CHECK(four.cut_out({}) == Perm::identity_n(4));
  CHECK(four.cut_out({0, 1, 2, 3}) == four);

  Perm c = four.cut_out({0, 2});
  CHECK(c(0) == 2);
  CHECK(c(2) == 0);
  CHECK(c(1) == 1);
  CHECK(c(3) == 3);
}

TEST_CASE("round trip through cycles") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 1 + static_cast<int>(rng() % 10);
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 0);
    std::shuffle(img.begin(), img.end(), rng);
    Perm p = Perm::from_images(Perm::identity_n(n).ground(), img);
    CHECK(Perm::from_cycles(p.ground(), p.cycles()) == p);
  }
}

TEST_CASE("restrict is idempotent along nested subsets") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 + static_cast<int>(rng() % 9);
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 0);
    std::shuffle(img.begin(), img.end(), rng);
    Perm p = Perm::from_images(Perm::identity_n(n).ground(), img);
    std::vector<int> a, b;
    for (int i = 0; i < n; ++i)
      if (rng() % 2) {
        a.push_back(i);
        if (rng() % 2) b.push_back(i);
      }
    if (b.empty()) continue;
    CHECK(p.restrict_to(a).restrict_to(b) == p.restrict_to(b));
  }
}

TEST_CASE("product-restriction law on random triples") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 500; ++trial) {
    int n = 1 + static_cast<int>(rng() % 8);
    auto rand_perm = [&]() {
      std::vector<int> img(static_cast<std::size_t>(n));
      std::iota(img.begin(), img.end(), 0);
      std::shuffle(img.begin(), img.end(), rng);
      return Perm::from_images(Perm::identity_n(n).ground(), img);
    };
    Perm sigma = rand_perm(), mu = rand_perm();
    std::vector<int> sub;
    for (int i = 0; i < n; ++i)
      if (rng() % 2) sub.push_back(i);
    Perm lhs = compose(sigma.cut_out(sub), mu.cut_out(sub));
    Perm rhs = compose(sigma, mu.cut_out(sub)).cut_out(sub);
    REQUIRE(lhs == rhs);
  }
}
