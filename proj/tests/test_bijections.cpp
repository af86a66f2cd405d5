#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "bijections.hpp"
#include "enumerate.hpp"
#include "match.hpp"

using namespace vinc;

namespace {

VincularPattern vp(const char* s) { return VincularPattern::parse(s); }

std::vector<Word> arrangements(Word letters) {
  std::sort(letters.begin(), letters.end());
  std::vector<Word> out;
  do {
    out.push_back(letters);
  } while (std::next_permutation(letters.begin(), letters.end()));
  return out;
}

}  // namespace

TEST_CASE("prime_map basics") {
  CHECK(prime_map({3, 2}) == Word{2, 3});
  CHECK(prime_map({7}) == Word{7});
  CHECK(prime_map({}) == Word{});
  CHECK_THROWS_AS(prime_map({2, 2}), std::invalid_argument);
}

TEST_CASE("prime_map is an involution") {
  for (const Word& letters : {Word{1, 2, 3, 4, 5, 6}, Word{2, 4, 5, 7, 9}, Word{3, 8}})
    for (const auto& w : arrangements(letters)) CHECK(prime_map(prime_map(w)) == w);
}

TEST_CASE("prime_map carries 31-2 avoiders onto 13-2 avoiders") {
  const auto p312 = vp("31-2");
  const auto p132 = vp("13-2");
  for (const Word& letters : {Word{1, 2, 3, 4, 5}, Word{2, 4, 5, 7, 9, 6}}) {
    std::set<Word> image, target;
    for (const auto& w : arrangements(letters)) {
      if (avoids(w, p312)) image.insert(prime_map(w));
      if (avoids(w, p132)) target.insert(w);
    }
    CHECK(image == target);
  }
}

TEST_CASE("map_1423_to_1243 small cases") {
  CHECK(map_1423_to_1243(Permutation::of("132")) == Permutation::of("123"));
  // hand-traced: thresholds {4,5} split alpha_2 = (3,6) into {3} and {6},
  // which swap; the final segment 45 primes to 54
  CHECK(map_1423_to_1243(Permutation::of("236145")) == Permutation::of("263154"));
  for (int n = 1; n <= 6; ++n) {
    Word desc;
    for (int v = n; v >= 1; --v) desc.push_back(v);
    const Permutation d{desc};
    CHECK(map_1423_to_1243(d) == d);  // all letters are minima
  }
  CHECK_THROWS_AS(map_1423_to_1243(Permutation::of("1423")), std::domain_error);
}

TEST_CASE("map_1423_to_1243 preserves left-to-right minima") {
  for (int n = 1; n <= 7; ++n) {
    AvoiderStream s({vp("1-42-3")}, n);
    while (auto pi = s.next()) {
      const auto img = map_1423_to_1243(*pi);
      CHECK(statistic(pi->letters(), StatKind::lr_min_positions) ==
            statistic(img.letters(), StatKind::lr_min_positions));
      CHECK(statistic(pi->letters(), StatKind::lr_min_values) ==
            statistic(img.letters(), StatKind::lr_min_values));
    }
  }
}

TEST_CASE("map_1342_to_3142 small cases") {
  for (const char* s : {"1", "12", "21", "123", "321", "213"})
    CHECK(map_1342_to_3142(Permutation::of(s)) == Permutation::of(s));
  // S empty: n last, prefix mapped recursively
  for (int n = 4; n <= 7; ++n) {
    AvoiderStream s({vp("13-4-2")}, n);
    while (auto pi = s.next()) {
      if (pi->at(n) != n) continue;
      const auto img = map_1342_to_3142(*pi);
      CHECK(img.at(n) == n);
    }
  }
  CHECK_THROWS_AS(map_1342_to_3142(Permutation::of("1342")), std::domain_error);
}

TEST_CASE("map_1342_to_3142 preserves the last letter") {
  for (int n = 1; n <= 7; ++n) {
    AvoiderStream s({vp("13-4-2")}, n);
    while (auto pi = s.next()) {
      const auto img = map_1342_to_3142(*pi);
      CHECK(pi->at(n) == img.at(n));
    }
  }
}

TEST_CASE("sliding maps small cases") {
  CHECK(map_3124_to_1324(Permutation::of("1234")) == Permutation::of("1234"));
  CHECK(map_4123_to_1423(Permutation::of("2341")) == Permutation::of("2341"));
  CHECK_THROWS_AS(map_3124_to_1324(Permutation::of("3124")), std::domain_error);
  CHECK_THROWS_AS(map_4123_to_1423(Permutation::of("4123")), std::domain_error);
}

TEST_CASE("sliding maps keep a trailing 1 and recurse on the rest") {
  for (int n = 4; n <= 7; ++n) {
    AvoiderStream s({vp("31-2-4")}, n);
    while (auto pi = s.next()) {
      if (pi->at(n) != 1) continue;
      Word head(pi->letters().begin(), pi->letters().end() - 1);
      const auto img = map_3124_to_1324(*pi);
      CHECK(img.at(n) == 1);
      // a head that is fixed stays fixed with the 1 appended
      Word img_head(img.letters().begin(), img.letters().end() - 1);
      if (img_head == head) CHECK(img == *pi);
    }
  }
}

TEST_CASE("slide image has no low occurrence left behind") {
  // after f_n, the image avoids 13-2-4 entirely; spot-check the n-1 recursion
  // boundary by validating every image at n <= 7
  for (int n = 4; n <= 7; ++n) {
    AvoiderStream s({vp("31-2-4")}, n);
    while (auto pi = s.next()) CHECK(avoids(map_3124_to_1324(*pi).letters(), vp("13-2-4")));
  }
}

TEST_CASE("verify_bijection validates all four maps at n=7") {
  for (const auto& [name, b] : bijection_registry()) {
    const auto rep = verify_bijection(b.map, b.domain, b.codomain, 7, b.preserved, name);
    CHECK(rep.pass);
    CHECK(rep.domain_size == rep.codomain_size);
  }
}

TEST_CASE("verify_bijection flags the identity as a non-bijection") {
  const auto rep = verify_bijection([](const Permutation& p) { return p; }, vp("124-3"),
                                    vp("134-2"), 5, {}, "identity");
  REQUIRE_FALSE(rep.pass);
  CHECK(rep.violation == "image contains 134-2");
  REQUIRE(rep.witness.has_value());
  CHECK(avoids(rep.witness->letters(), vp("124-3")));
  CHECK_FALSE(avoids(rep.witness->letters(), vp("134-2")));
}

TEST_CASE("verify_bijection flags a broken statistic claim") {
  // the sliding map does not preserve lr-minima positions in general
  const auto rep = verify_bijection(&map_3124_to_1324, vp("31-2-4"), vp("13-2-4"), 6,
                                    {StatKind::lr_min_positions}, "slide-3124");
  CHECK_FALSE(rep.pass);
}

TEST_CASE("bijection registry names") {
  const auto& reg = bijection_registry();
  CHECK(reg.count("f-1423") == 1);
  CHECK(reg.count("block-1342") == 1);
  CHECK(reg.count("slide-3124") == 1);
  CHECK(reg.count("g-4123") == 1);
  CHECK(reg.at("f-1423").domain.str() == "1-42-3");
  CHECK(reg.at("g-4123").codomain.str() == "14-2-3");
}
