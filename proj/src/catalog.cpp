#include "zdglab/catalog.hpp"

#include <algorithm>
#include <numeric>

#include "zdglab/error.hpp"

namespace zdg {

namespace {

TableRow row(int v, std::size_t size, std::string shape, std::size_t a, std::size_t g,
             std::size_t w) {
  std::optional<int> fig;
  if (shape.rfind("Fig. ", 0) == 0) fig = std::stoi(shape.substr(5));
  return {v, size, std::move(shape), fig, a, g, w};
}

std::vector<CatalogEntry> build() {
  // Printed values, typos included.
  std::vector<CatalogEntry> c = {
      {"Z4", "Zn(4)", {row(1, 4, "K_1", 1, 1, 1)}, {}},
      {"Z2[X]/(X^2)", "Q(2;X;X^2)", {row(1, 4, "K_1", 1, 1, 1)}, {}},

      {"Z9", "Zn(9)", {row(2, 9, "K_2", 1, 1, 2)}, {}},
      {"Z2xZ2", "P(Zn(2),Zn(2))", {row(2, 9, "K_2", 1, 1, 2)}, {}},
      {"Z3[X]/(X^2)", "Q(3;X;X^2)", {row(2, 9, "K_2", 1, 1, 2)}, {}},

      {"Z6", "Zn(6)", {row(3, 6, "K_{1,2}", 2, 1, 2)}, {}},
      {"Z8", "Zn(8)", {row(3, 8, "K_{1,2}", 2, 1, 2)}, {}},
      {"Z2[X]/(X^3)", "Q(2;X;X^3)", {row(3, 8, "K_{1,2}", 2, 1, 2)}, {}},
      {"Z4[X]/(2X,X^2-2)", "Q(4;X;2X,X^2-2)", {row(3, 8, "K_{1,2}", 2, 1, 2)}, {}},
      {"Z2[X,Y]/(X,Y)^2", "Q(2;X,Y;X^2,XY,Y^2)", {row(3, 8, "K_3", 1, 1, 3)}, {}},
      {"Z4[X]/(2,X)^2", "Q(4;X;2X,X^2)", {row(3, 8, "K_3", 1, 1, 3)}, {}},
      {"F4[X]/(X^2)", "Q(2;X,T;X^2,T^2+T+1)", {row(3, 16, "K_3", 1, 1, 3)}, {}},
      {"Z4[X]/(X^2+X+1)", "Q(4;X;X^2+X+1)", {row(3, 16, "K_3", 1, 1, 3)}, {}},

      {"Z2xF4", "P(Zn(2),GF(2,2))", {row(4, 8, "K_{1,3}", 3, 1, 2)}, {}},
      {"Z3xZ3", "P(Zn(3),Zn(3))", {row(4, 9, "K_{2,2}", 2, 2, 2)}, {}},
      {"Z25", "Zn(25)", {row(4, 25, "K_4", 1, 1, 4)}, {}},
      {"Z5[X]/(X^2)", "Q(5;X;X^2)", {row(4, 25, "K_4", 1, 1, 4)}, {}},

      {"Z2xZ5", "P(Zn(2),Zn(5))", {row(5, 10, "K_{1,4}", 4, 1, 2)}, {}},
      {"Z3xF4", "P(Zn(3),GF(2,2))", {row(5, 12, "K_{2,3}", 3, 2, 2)}, {}},
      {"Z2xZ4", "P(Zn(2),Zn(4))", {row(5, 8, "Fig. 1", 3, 2, 2)}, {}},
      {"Z2xZ2[X]/(X^2)", "P(Zn(2),Q(2;X;X^2))", {row(5, 8, "Fig. 1", 2, 1, 2)}, {}},

      {"Z3xZ5", "P(Zn(3),Zn(5))", {row(6, 15, "K_{2,4}", 4, 2, 2)}, {}},
      {"F4xF4", "P(GF(2,2),GF(2,2))", {row(6, 16, "K_{3,3}", 3, 2, 2)}, {}},
      {"Z2xZ2xZ2", "P(Zn(2),Zn(2),Zn(2))", {row(6, 8, "Fig. 2", 3, 3, 3)}, {}},
      {"Z49", "Zn(49)", {row(6, 49, "K_6", 1, 1, 6)}, {}},
      {"Z7[X]/(X^2)", "Q(7;X;X^2)", {row(6, 49, "K_6", 1, 1, 6)}, {}},

      {"Z2xZ7", "P(Zn(2),Zn(7))", {row(7, 14, "K_{1,6}", 6, 1, 2)}, {}},
      {"F4xZ5", "P(GF(2,2),Zn(5))", {row(7, 10, "K_{3,4}", 4, 2, 2)}, {}},
      {"Z3xZ4", "P(Zn(3),Zn(4))", {row(7, 12, "Fig. 3", 4, 2, 2)}, {}},
      {"Z3xZ2[X]/(X^2)", "P(Zn(3),Q(2;X;X^2))", {row(7, 12, "Fig. 3", 4, 2, 2)}, {}},
      {"Z16", "Zn(16)", {row(7, 16, "Fig. 4", 5, 1, 3)}, {}},
      {"Z2[X]/(X^4)", "Q(2;X;X^4)", {row(7, 16, "Fig. 4", 5, 1, 3)}, {}},
      {"Z4[X]/(X^2+2)", "Q(4;X;X^2+2)", {row(7, 16, "Fig. 4", 5, 1, 3)}, {}},
      {"Z4[X]/(X^2+3X)", "Q(4;X;X^2+3X)", {row(7, 16, "Fig. 4", 5, 1, 3)}, {}},
      {"Z4[X]/(X^3-2,2X^2,2X)", "Q(4;X;X^3-2,2X^2,2X)", {row(7, 16, "Fig. 4", 5, 1, 3)}, {}},
      {"Z2[X,Y]/(X^3,XY,Y^2)", "Q(2;X,Y;X^3,XY,Y^2)", {row(7, 16, "Fig. 5", 4, 1, 4)}, {}},
      {"Z8[X]/(2X,X^2)", "Q(8;X;2X,X^2)", {row(7, 16, "Fig. 5", 4, 1, 4)}, {}},
      {"Z4[X]/(X^3,2X^2,2X)", "Q(4;X;X^3,2X^2,2X)", {row(7, 16, "Fig. 5", 4, 1, 4)}, {}},
      {"Z4[X]/(X^2+2X)", "Q(4;X;X^2+2X)", {row(7, 16, "Fig. 6", 3, 1, 3)}, {}},
      {"Z8[X]/(2X,X^2+4)", "Q(8;X;2X,X^2+4)", {row(7, 16, "Fig. 6", 3, 1, 3)}, {}},
      {"Z2[X,Y]/(X^2,Y^2-XY)", "Q(2;X,Y;X^2,Y^2-XY)", {row(7, 16, "Fig. 6", 3, 1, 3)}, {}},
      {"Z4[X,Y]/(X^2,Y^2-XY,XY-2,2X,2Y)", "Q(4;X,Y;X^2,Y^2-XY,XY-2,2X,2Y)",
       {row(7, 16, "Fig. 6", 3, 1, 3)}, {}},
      {"Z4[X,Y]/(X^2,Y^2,XY-2,2X,2Y)", "Q(4;X,Y;X^2,Y^2,XY-2,2X,2Y)",
       {row(7, 16, "Fig. 7", 3, 1, 3)}, {}},
      {"Z2[X,Y]/(X^2,Y^2)", "Q(2;X,Y;X^2,Y^2)", {row(7, 16, "Fig. 7", 3, 1, 3)}, {}},
      {"Z4[X]/(X^2)", "Q(4;X;X^2)", {row(7, 16, "Fig. 7", 3, 1, 3)}, {}},
      {"Z4[X]/(X^3-X^2-2,2X^2,2X)", "Q(4;X;X^3-X^2-2,2X^2,2X)",
       {row(7, 16, "Fig. 8", 4, 1, 3)}, {}},
      {"Z2[X,Y,Z]/(X,Y,Z)^2", "Q(2;X,Y,Z;X^2,Y^2,Z^2,XY,XZ,YZ)", {row(7, 16, "K_7", 1, 1, 7)}, {}},
      {"Z4[X,Y]/(X^2,Y^2,XY,2X,2Y)", "Q(4;X,Y;X^2,Y^2,XY,2X,2Y)", {row(7, 16, "K_7", 1, 1, 7)}, {}},
      {"F8[X]/(X^2)", "Q(2;X,T;X^2,T^3+T+1)", {row(7, 64, "K_7", 1, 1, 7)}, {}},
      {"Z4[X]/(X^3+X+1)", "Q(4;X;X^3+X+1)", {row(7, 64, "K_7", 1, 1, 7)}, {}},

      {"Z2xF8", "P(Zn(2),GF(2,3))", {row(8, 16, "K_{1,7}", 7, 1, 2)}, {}},
      {"Z3xZ7", "P(Zn(3),Zn(7))", {row(8, 21, "K_{2,6}", 6, 2, 2)}, {}},
      {"Z5xZ5", "P(Zn(5),Zn(5))", {row(8, 25, "K_{4,4}", 4, 2, 2)}, {}},
      {"Z27", "Zn(27)", {row(8, 27, "Fig. 9", 6, 1, 3)}, {}},
      {"Z9[X]/(3X,X^2-3)", "Q(9;X;3X,X^2-3)", {row(8, 27, "Fig. 9", 6, 1, 3)}, {}},
      {"Z9[X]/(3X,X^2-6)", "Q(9;X;3X,X^2-6)", {row(8, 27, "Fig. 9", 6, 1, 3)}, {}},
      {"Z3[X]/(X^3)", "Q(3;X;X^3)", {row(8, 27, "Fig. 9", 6, 1, 3)}, {}},
      {"Z3[X,Y]/(X,Y)^2", "Q(3;X,Y;X^2,XY,Y^2)", {row(8, 27, "K_8", 1, 1, 8)}, {}},
      {"Z9[X]/(3,X)^2", "Q(9;X;3X,X^2)", {row(8, 27, "K_8", 1, 1, 8)}, {}},
      {"F9[X]/(X^2)", "Q(3;X,T;X^2,T^2+1)", {row(8, 81, "K_8", 1, 1, 8)}, {}},
      {"Z9[X]/(X^2+1)", "Q(9;X;X^2+1)", {row(8, 81, "K_8", 1, 1, 8)}, {}},

      {"Z2xF9", "P(Zn(2),GF(3,2))", {row(9, 18, "K_{1,8}", 8, 1, 2)}, {}},
      {"Z3xF8", "P(Zn(3),GF(2,3))", {row(9, 24, "K_{2,7}", 7, 2, 2)}, {}},
      {"F4xZ7", "P(GF(2,2),Zn(7))", {row(9, 28, "K_{3,6}", 6, 2, 2)}, {}},
      {"Z2xZ2xZ3", "P(Zn(2),Zn(2),Zn(3))", {row(9, 12, "Fig. 10", 6, 3, 3)}, {}},
      {"Z4xF4", "P(Zn(4),GF(2,2))", {row(9, 16, "Fig. 11", 6, 2, 2)}, {}},
      {"Z2[X]/(X^2)xF4", "P(Q(2;X;X^2),GF(2,2))", {row(9, 16, "Fig. 11", 6, 2, 2)}, {}},

      {"Z3xF9", "P(Zn(3),GF(3,2))", {row(10, 27, "K_{2,8}", 8, 2, 2)}, {}},
      {"F4xF8", "P(GF(2,2),GF(2,3))", {row(10, 32, "K_{3,7}", 7, 2, 2)}, {}},
      {"Z5xZ7", "P(Zn(5),Zn(7))", {row(10, 35, "K_{4,6}", 6, 2, 2)}, {}},
      {"Z121", "Zn(121)", {row(10, 121, "K_{10}", 1, 1, 10)}, {}},
      {"Z11[X]/(X^2)", "Q(11;X;X^2)", {row(10, 121, "K_{10}", 1, 1, 10)}, {}},

      {"Z2xZ11", "P(Zn(2),Zn(11))", {row(11, 22, "K_{1,10}", 10, 1, 2)}, {}},
      {"F4xF9", "P(GF(2,2),GF(3,2))", {row(11, 36, "K_{3,8}", 8, 2, 2)}, {}},
      {"Z5xF8", "P(Zn(5),GF(2,3))", {row(11, 40, "K_{4,7}", 7, 2, 2)}, {}},
      {"Z2xZ9", "P(Zn(2),Zn(9))", {row(11, 18, "Fig. 12", 8, 3, 3)}, {}},
      {"Z2xZ3[X]/(X^2)", "P(Zn(2),Q(3;X;X^2))", {row(11, 18, "Fig. 12", 8, 3, 3)}, {}},
      {"Z5xZ4", "P(Zn(5),Zn(4))", {row(11, 20, "Fig. 13", 8, 3, 2)}, {}},
      {"Z5xZ2[X]/(X^2)", "P(Zn(5),Q(2;X;X^2))", {row(11, 20, "Fig. 13", 8, 3, 2)}, {}},
      {"Z2xZ8", "P(Zn(2),Zn(8))", {row(11, 16, "Fig. 14", 8, 2, 3)}, {}},
      {"Z2xZ2[X]/(X^3)", "P(Zn(2),Q(2;X;X^3))", {row(11, 16, "Fig. 14", 8, 2, 3)}, {}},
      {"Z2xZ4[X]/(2X,X^2-2)", "P(Zn(2),Q(4;X;2X,X^2-2))", {row(11, 16, "Fig. 14", 8, 2, 3)}, {}},
      {"Z2xZ2[X,Y]/(X,Y)^2", "P(Zn(2),Q(2;X,Y;X^2,XY,Y^2))", {row(11, 16, "Fig. 15", 7, 2, 4)}, {}},
      {"Z2xZ4[X]/(2,X)^2", "P(Zn(2),Q(4;X;2X,X^2))", {row(11, 16, "Fig. 15", 7, 2, 4)}, {}},
      {"Z4xZ4", "P(Zn(4),Zn(4))", {row(11, 16, "Fig. 16", 6, 2, 3)}, {}},
      {"Z4xZ2[X]/(X^2)", "P(Zn(4),Q(2;X;X^2))", {row(11, 16, "Fig. 16", 6, 2, 3)}, {}},
      {"Z2[X]/(X^2)xZ2[X]/(X^2)", "P(Q(2;X;X^2),Q(2;X;X^2))", {row(11, 16, "Fig. 16", 6, 2, 3)}, {}},

      {"Z3xZ11", "P(Zn(3),Zn(11))", {row(12, 33, "K_{2,10}", 10, 2, 2)}, {}},
      {"Z5xZ9", "P(Zn(5),Zn(9))", {row(12, 45, "K_{4,8}", 8, 2, 2)}, {}},
      {"Z7xZ7", "P(Zn(7),Zn(7))", {row(12, 49, "K_{6,6}", 6, 2, 2)}, {}},
      {"Z2xZ2xZ4", "P(Zn(2),Zn(2),Zn(4))",
       {row(12, 16, "Fig. 17", 6, 2, 2), row(13, 16, "Fig. 19", 8, 3, 3)}, {}},
      {"Z169", "Zn(169)", {row(12, 169, "K_{12}", 1, 1, 12)}, {}},
      {"Z13[X]/(X^2)", "Q(13;X;X^2)", {row(12, 169, "K_{12}", 1, 1, 12)}, {}},

      {"Z2xZ13", "P(Zn(2),Zn(13))", {row(13, 26, "K_{1,12}", 12, 1, 2)}, {}},
      {"F4xZ11", "P(GF(2,2),Zn(11))", {row(13, 44, "K_{3,10}", 10, 2, 2)}, {}},
      {"Z7xF8", "P(Zn(7),GF(2,3))", {row(13, 56, "K_{6,7}", 7, 2, 2)}, {}},
      {"Z2xZ3xZ3", "P(Zn(2),Zn(3),Zn(3))", {row(13, 18, "Fig. 18", 8, 3, 3)}, {}},
      {"Z2xZ2xZ2[X]/(X^2)", "P(Zn(2),Zn(2),Q(2;X;X^2))", {row(13, 16, "Fig. 19", 8, 3, 3)}, {}},

      {"Z3xZ13", "P(Zn(3),Zn(13))", {row(14, 39, "K_{2,12}", 12, 2, 2)}, {}},
      {"Z5xZ11", "P(Zn(5),Zn(11))", {row(14, 55, "K_{4,10}", 10, 2, 2)}, {}},
      {"Z7xF9", "P(Zn(7),GF(3,2))", {row(14, 63, "K_{6,8}", 8, 2, 2)}, {}},
      {"F8xF8", "P(GF(2,3),GF(2,3))", {row(14, 64, "K_{7,7}", 7, 2, 2)}, {}},
      {"Z2xZ2xZ2xZ2", "P(Zn(2),Zn(2),Zn(2),Zn(2))", {row(14, 16, "Fig. 20", 7, 4, 3)}, {}},
      {"Z3xZ9", "P(Zn(3),Zn(9))", {row(14, 27, "Fig. 21", 10, 2, 3)}, {}},
      {"Z3xZ3[X]/(X^2)", "P(Zn(3),Q(3;X;X^2))", {row(14, 27, "Fig. 21", 10, 2, 3)}, {}},

      {"Z2xZ2xF4", "P(Zn(2),Zn(2),GF(2,2))", {}, 17},
  };
  return c;
}

std::size_t edit_distance(std::string_view a, std::string_view b) {
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  std::iota(prev.begin(), prev.end(), 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j)
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (a[i - 1] != b[j - 1])});
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

}  // namespace

const std::vector<CatalogEntry>& catalog_all() {
  static const std::vector<CatalogEntry> entries = build();
  return entries;
}

const CatalogEntry& catalog_lookup(std::string_view name) {
  const auto& all = catalog_all();
  for (const auto& e : all)
    if (e.name == name) return e;
  const CatalogEntry* best = nullptr;
  std::size_t best_d = 0;
  for (const auto& e : all) {
    const auto d = edit_distance(name, e.name);
    if (!best || d < best_d) {
      best = &e;
      best_d = d;
    }
  }
  throw Error(ErrorKind::NotFound, "no catalog ring named '" + std::string(name) +
                                       "'; did you mean '" + best->name + "'?");
}

}  // namespace zdg
