#include "doctest.h"

#include <set>

#include "zdglab/catalog.hpp"
#include "zdglab/error.hpp"

using namespace zdg;

TEST_SUITE("catalog") {

TEST_CASE("rows and groups") {
  std::size_t rows = 0;
  std::set<int> groups;
  for (const auto& e : catalog_all()) {
    rows += e.rows.size();
    for (const auto& r : e.rows) groups.insert(r.vertices);
    CHECK((!e.rows.empty() || e.caption_figure));
  }
  CHECK(rows == 106);
  CHECK(groups.size() == 14);
  CHECK(*groups.begin() == 1);
  CHECK(*groups.rbegin() == 14);
}

TEST_CASE("lookup") {
  const auto& z6 = catalog_lookup("Z6");
  REQUIRE(z6.rows.size() == 1);
  CHECK(z6.rows[0].shape == "K_{1,2}");
  CHECK(z6.rows[0].alpha == 2);
  CHECK(catalog_lookup("Z2xZ2xZ4").rows.size() == 2);
  CHECK(catalog_lookup("Z2xZ2xF4").caption_figure == 17);
  try {
    catalog_lookup("Z61");
    FAIL("expected NotFound");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotFound);
    CHECK(std::string(e.what()).find("Z6") != std::string::npos);
  }
}

TEST_CASE("figure rows parse their figure number") {
  for (const auto& e : catalog_all())
    for (const auto& r : e.rows)
      if (r.shape.rfind("Fig. ", 0) == 0) CHECK(r.figure);
      else CHECK_FALSE(r.figure);
}

}
