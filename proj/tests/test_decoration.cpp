#include "doctest.h"
#include "platonic/decoration.hpp"
#include "platonic/error.hpp"

using namespace platonic;

namespace {

Decoration dec(const char* s) { return Decoration::parse(s); }

std::vector<Diagram> chains(int max_rank) {
  std::vector<Diagram> out;
  for (int n = 1; n <= max_rank; ++n) out.push_back(Diagram::build(Family::A, n));
  for (int n = 2; n <= max_rank; ++n) {
    out.push_back(Diagram::build(Family::B, n));
    out.push_back(Diagram::build(Family::C, n));
  }
  out.push_back(Diagram::build(Family::F4, 4));
  out.push_back(Diagram::build(Family::H2, 2));
  out.push_back(Diagram::build(Family::H3, 3));
  out.push_back(Diagram::build(Family::H4, 4));
  return out;
}

}  // namespace

TEST_CASE("text form") {
  CHECK(dec("ffso").to_string() == "ffso");
  CHECK(dec("FSO").to_string() == "fso");
  CHECK(dec("fso").to_glyphs() == "◆ □ ◊");
  CHECK(dec("fso").reversed() == dec("osf"));
  CHECK_THROWS_AS(dec("fxo"), ParseError);
  CHECK_THROWS_AS(dec(""), ParseError);
}

TEST_CASE("validate examples") {
  const Diagram h3 = Diagram::build(Family::H3, 3);
  const Diagram a3 = Diagram::build(Family::A, 3);
  CHECK(validate(h3, dec("fso")));
  CHECK_FALSE(validate(a3, dec("fos")));
  CHECK(validate(a3, dec("sss")));
  CHECK(validate(a3, dec("fsf")));
  CHECK(validate(a3, dec("ofo")) == false);
  CHECK_THROWS_AS(validate(a3, dec("fs")), InvalidDecoration);
  // non-adjacent open and filled nodes are fine
  CHECK(validate(Diagram::build(Family::A, 4), dec("fsso")));
  CHECK(validate(Diagram::build(Family::A, 4), dec("fsof")) == false);
}

TEST_CASE("seed examples") {
  const Diagram a3 = Diagram::build(Family::A, 3);
  CHECK(seed(a3, End::Left) == dec("soo"));
  CHECK(seed(a3, End::Right) == dec("oos"));
  CHECK(seed(Diagram::build(Family::A, 1), End::Left) == dec("s"));
  CHECK_THROWS_AS(seed(Diagram::build(Family::D, 5), End::Left), NotPlatonic);
}

TEST_CASE("step examples") {
  const Diagram a4 = Diagram::build(Family::A, 4);
  CHECK(step(a4, dec("sooo")) == std::vector{dec("fsoo")});
  CHECK(step(a4, dec("fsoo")) == std::vector{dec("ffso")});
  CHECK_THROWS_AS(step(Diagram::build(Family::A, 3), dec("ffs")), InvalidDecoration);
  CHECK_THROWS_AS(step(a4, dec("oooo")), InvalidDecoration);
  CHECK_THROWS_AS(step(a4, dec("fooo")), InvalidDecoration);  // grammar violation
}

TEST_CASE("step branches over several squares") {
  const Diagram a4 = Diagram::build(Family::A, 4);
  // squares at both ends
  const auto next = step(a4, dec("soos"));
  REQUIRE(next.size() == 2);
  CHECK(next[0] == dec("fsos"));
  CHECK(next[1] == dec("sosf"));
  for (const auto& n : next) CHECK(validate(a4, n));
  // successors are deduplicated and sorted
  const auto all = step(a4, dec("ssoo"));
  CHECK(std::is_sorted(all.begin(), all.end()));
  CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
}

TEST_CASE("chain examples") {
  CHECK(chain(Diagram::build(Family::A, 3), End::Left) ==
        std::vector{dec("soo"), dec("fso"), dec("ffs")});
  CHECK(chain(Diagram::build(Family::H4, 4), End::Right) ==
        std::vector{dec("ooos"), dec("oosf"), dec("osff"), dec("sfff")});
  CHECK(chain(Diagram::build(Family::A, 1), End::Left) == std::vector{dec("s")});
  CHECK_THROWS_AS(chain(Diagram::build(Family::D, 4), End::Right), NotPlatonic);
}

TEST_CASE("dual reading") {
  const auto a = dual_read(dec("soo"));
  CHECK(a.dimension == 2);
  CHECK(a.face_nodes == NodeSet{2, 3});
  CHECK(a.stabilizer_nodes.empty());
  const auto b = dual_read(dec("fso"));
  CHECK(b.dimension == 1);
  CHECK(b.face_nodes == NodeSet{3});
  CHECK(b.stabilizer_nodes == NodeSet{1});
  CHECK(dual_read(dec("ffs")).dimension == 0);
}

TEST_CASE("locate in chain") {
  const Diagram b4 = Diagram::build(Family::B, 4);
  const auto p = locate_in_chain(b4, dec("ffso"));
  REQUIRE(p);
  CHECK(p->end == End::Left);
  CHECK(p->index == 2);
  CHECK(locate_in_chain(b4, dec("osff"))->end == End::Right);
  CHECK_FALSE(locate_in_chain(b4, dec("sfso")));
  CHECK_FALSE(locate_in_chain(b4, dec("ffff")));
}

TEST_CASE("chain invariants on every supported chain up to rank 8") {
  for (const Diagram& d : chains(8)) {
    for (End end : {End::Left, End::Right}) {
      const auto c = chain(d, end);
      REQUIRE(static_cast<int>(c.size()) == d.rank());
      for (int k = 0; k < d.rank(); ++k) {
        const Decoration& x = c[static_cast<std::size_t>(k)];
        CHECK(validate(d, x));
        CHECK(x.dimension() == k);
        CHECK(x.squares().size() == 1);
        CHECK(x.filled().size() + x.open().size() + x.squares().size() == d.rank());
        CHECK(x.dimension() + x.dual_dimension() + 1 == d.rank());
        const int square = end == End::Left ? k + 1 : d.rank() - k;
        CHECK(x[square] == Symbol::Square);
        if (k + 1 < d.rank()) {
          const auto next = step(d, x);
          REQUIRE(next.size() == 1);
          CHECK(next.front() == c[static_cast<std::size_t>(k) + 1]);
        } else {
          CHECK_THROWS_AS(step(d, x), InvalidDecoration);
        }
        const auto where = locate_in_chain(d, x);
        REQUIRE(where);
        CHECK(where->index == k);
      }
    }
  }
}

TEST_CASE("A_n chains mirror each other") {
  for (int n = 1; n <= 8; ++n) {
    const Diagram d = Diagram::build(Family::A, n);
    const auto left = chain(d, End::Left);
    const auto right = chain(d, End::Right);
    for (int k = 0; k < n; ++k) CHECK(left[k].reversed() == right[k]);
  }
}
