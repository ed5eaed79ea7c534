#include <algorithm>
#include <string>

#include "doctest.h"
#include "rcurv/errors.hpp"
#include "rcurv/families.hpp"
#include "rcurv/isomorphism.hpp"
#include "rcurv/verify.hpp"

using namespace rcurv;

namespace {

const CheckRow* find_row(const std::vector<CheckRow>& rows, const std::string& check) {
  auto it = std::find_if(rows.begin(), rows.end(), [&](const CheckRow& r) { return r.check == check; });
  return it == rows.end() ? nullptr : &*it;
}

}  // namespace

TEST_CASE("standard corpus contents") {
  auto c = standard_corpus();
  CHECK(c.size() == 30);
  for (const CorpusEntry& e : c) CHECK_NOTHROW((void)e.build());
  auto gosset_entry = std::find_if(c.begin(), c.end(), [](const CorpusEntry& e) { return e.name == "Gosset"; });
  REQUIRE(gosset_entry != c.end());
  CHECK(are_isomorphic(gosset_entry->build(), gosset()));
  CHECK(resolve_corpus("standard").size() == 30);
}

TEST_CASE("corpus files") {
  auto c = read_corpus_file(std::string(RCURV_TEST_DATA) + "/small_corpus.txt");
  REQUIRE(c.size() == 3);
  CHECK(c[0].source == "C 5");
  CHECK(c[2].name == "@k2.txt");
  CHECK(c[2].build().vertex_count() == 2);
  CHECK_THROWS_AS(read_corpus_file("/nonexistent/corpus"), InputError);
}

TEST_CASE("empty corpus") {
  VerifyReport r = verify_theorems({});
  CHECK(r.rows.empty());
  CHECK(r.passed());
}

TEST_CASE("C5 skips the reflective suite") {
  auto rows = verify_graph("C5", cycle(5));
  for (const char* c : {"V_x^y convex and reflective", "parallel gradient identity", "distance transitive",
                        "side matching structure"}) {
    const CheckRow* r = find_row(rows, c);
    REQUIRE(r != nullptr);
    CHECK(r->status == CheckStatus::kSkip);
  }
  for (const CheckRow& r : rows) CHECK(r.status != CheckStatus::kFail);
  CHECK(find_row(rows, "LP oracle equivalence")->status == CheckStatus::kPass);
}

TEST_CASE("reflective graph runs the full suite") {
  auto rows = verify_graph("J(5,2)", johnson(5, 2));
  for (const CheckRow& r : rows) {
    CAPTURE(r.check);
    CHECK(r.status == CheckStatus::kPass);
  }
  CHECK(find_row(rows, "distance transitive") != nullptr);
  CHECK(find_row(rows, "E2 sharp iff reflective") != nullptr);
}

TEST_CASE("a build failure becomes a row") {
  VerifyReport r = verify_theorems({{"bad", "J 5"}, {"ok", "K 3"}}, {1e-8, 10, 2});
  REQUIRE_FALSE(r.rows.empty());
  CHECK(r.rows.front().graph == "bad");
  CHECK(r.rows.front().status == CheckStatus::kFail);
  CHECK_FALSE(r.passed());
  CHECK(r.rows.back().graph == "ok");
  CHECK(r.table().find("FAIL") != std::string::npos);
}
