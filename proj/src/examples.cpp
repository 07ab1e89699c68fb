#include "dglab/examples.hpp"

#include <array>
#include <stdexcept>

namespace dglab {

namespace {

CayleyTable cyclic_group(int n) {
  std::vector<std::string> names;
  if (n <= 4) {
    names.push_back("e");
    for (int i = 1; i < n; ++i)
      names.push_back(i == 1 ? "c" : "c" + std::to_string(i));
  } else {
    for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
  }
  std::vector<int> products(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      products[static_cast<size_t>(i) * n + j] = (i + j) % n;
  return CayleyTable(std::move(names), std::move(products));
}

CayleyTable symmetric3() {
  // Permutations of {0,1,2}; product row*col applies col first, then row.
  const std::array<std::array<int, 3>, 6> perms = {{
      {0, 1, 2},  // e
      {1, 0, 2},  // (12)
      {2, 1, 0},  // (13)
      {0, 2, 1},  // (23)
      {1, 2, 0},  // (123): 0->1,1->2,2->0
      {2, 0, 1},  // (132)
  }};
  std::vector<std::string> names = {"e", "(12)", "(13)", "(23)", "(123)", "(132)"};
  std::vector<int> products(36);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      std::array<int, 3> comp;
      for (int x = 0; x < 3; ++x) comp[static_cast<size_t>(x)] = perms[static_cast<size_t>(i)][static_cast<size_t>(perms[static_cast<size_t>(j)][static_cast<size_t>(x)])];
      int idx = -1;
      for (int k = 0; k < 6; ++k)
        if (perms[static_cast<size_t>(k)] == comp) idx = k;
      products[static_cast<size_t>(i) * 6 + j] = idx;
    }
  return CayleyTable(std::move(names), std::move(products));
}

CayleyTable left_zero(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  std::vector<int> products(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) products[static_cast<size_t>(i) * n + j] = i;
  return CayleyTable(std::move(names), std::move(products));
}

CayleyTable right_zero2() {
  return CayleyTable({"a", "b"}, {0, 1, 0, 1});
}

CayleyTable semilattice2() {
  // min on {0,1}
  return CayleyTable({"0", "1"}, {0, 0, 0, 1});
}

CayleyTable brandt2() {
  // Matrix units plus zero; (i,j)(k,l) = (i,l) if j == k, else 0.
  std::vector<std::string> names = {"e11", "e12", "e21", "e22", "0"};
  auto rc = [](int idx, int& row, int& col) {
    row = idx / 2;
    col = idx % 2;
  };
  std::vector<int> products(25, 4);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      int i, j, k, l;
      rc(a, i, j);
      rc(b, k, l);
      if (j == k) products[static_cast<size_t>(a) * 5 + b] = i * 2 + l;
    }
  return CayleyTable(std::move(names), std::move(products));
}

CayleyTable symmetric_inverse2() {
  // Partial injections on {0,1}; entry per point is the image or -1.
  // Product f*g composes g first: (f*g)(x) = f(g(x)).
  const std::array<std::array<int, 2>, 7> maps = {{
      {-1, -1},  // 0   (empty map)
      {0, -1},   // p11 (0 -> 0)
      {1, -1},   // p12 (0 -> 1)
      {-1, 0},   // p21 (1 -> 0)
      {-1, 1},   // p22 (1 -> 1)
      {0, 1},    // id
      {1, 0},    // swap
  }};
  std::vector<std::string> names = {"0", "p11", "p12", "p21", "p22", "id", "swap"};
  std::vector<int> products(49);
  for (int f = 0; f < 7; ++f)
    for (int g = 0; g < 7; ++g) {
      std::array<int, 2> comp;
      for (int x = 0; x < 2; ++x) {
        int mid = maps[static_cast<size_t>(g)][static_cast<size_t>(x)];
        comp[static_cast<size_t>(x)] =
            mid < 0 ? -1 : maps[static_cast<size_t>(f)][static_cast<size_t>(mid)];
      }
      int idx = -1;
      for (int k = 0; k < 7; ++k)
        if (maps[static_cast<size_t>(k)] == comp) idx = k;
      products[static_cast<size_t>(f) * 7 + g] = idx;
    }
  return CayleyTable(std::move(names), std::move(products));
}

}  // namespace

CayleyTable builtin_example(std::string_view name) {
  if (name == "Z1") return cyclic_group(1);
  if (name == "Z2") return cyclic_group(2);
  if (name == "Z3") return cyclic_group(3);
  if (name == "Z4") return cyclic_group(4);
  if (name == "Z6") return cyclic_group(6);
  if (name == "Z12") return cyclic_group(12);
  if (name == "S3") return symmetric3();
  if (name == "RZ2") return right_zero2();
  if (name == "SL2") return semilattice2();
  if (name == "B2") return brandt2();
  if (name == "I2") return symmetric_inverse2();
  if (name.size() > 2 && name.substr(0, 2) == "LZ") {
    int k = 0;
    for (char ch : name.substr(2)) {
      if (ch < '0' || ch > '9') k = -1;
      if (k < 0) break;
      k = k * 10 + (ch - '0');
    }
    if (k >= 1 && k <= 7) return left_zero(k);
  }
  throw std::invalid_argument("unknown example '" + std::string(name) + "'");
}

std::vector<std::string> builtin_names() {
  return {"Z1", "Z2", "Z3", "Z4", "Z6", "Z12", "S3",
          "LZ2", "LZ<k>", "RZ2", "SL2", "B2", "I2"};
}

}  // namespace dglab
