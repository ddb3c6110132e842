#include "cpg/group_spec.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <functional>
#include <map>
#include <sstream>

#include "cpg/error.hpp"
#include "cpg/number_theory.hpp"

namespace cpg {

namespace {

// ---------------------------------------------------------------- parsing

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  GroupSpec parse_all() {
    skip_space();
    GroupSpec spec = parse_spec();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return spec;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("group spec \"" + std::string(text_) + "\": " + what + " at offset " +
                     std::to_string(pos_));
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  void expect(char c) {
    skip_space();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::uint64_t number() {
    skip_space();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
    std::uint64_t value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > (1ull << 40)) fail("number too large");
      ++pos_;
    }
    return value;
  }

  std::string identifier() {
    skip_space();
    const std::size_t start = pos_;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
    if (pos_ == start) fail("expected a constructor name");
    return std::string(text_.substr(start, pos_ - start));
  }

  GroupSpec parse_spec() {
    skip_space();
    if (peek() == 'X' && peek(1) == '(') {
      pos_ += 2;
      auto left = std::make_shared<const GroupSpec>(parse_spec());
      expect(',');
      auto right = std::make_shared<const GroupSpec>(parse_spec());
      expect(')');
      return {spec::Product{std::move(left), std::move(right)}};
    }
    const std::string name = identifier();
    if (name == "Z") {
      expect(':');
      return {spec::Cyclic{number()}};
    }
    if (name == "D") {
      expect(':');
      return {spec::Dihedral{number()}};
    }
    if (name == "SD") {
      expect(':');
      const auto m = number();
      expect(',');
      const auto k = number();
      expect(',');
      const auto i = number();
      return {spec::Semidirect{m, k, i}};
    }
    if (name == "PERM") {
      expect(':');
      const auto degree = number();
      expect(':');
      spec::Permutations perm{degree, {}};
      perm.generators.push_back(generator(degree));
      while (true) {
        skip_space();
        if (peek() != ',') break;
        // A comma followed by '[' continues the generator list; anything
        // else belongs to an enclosing product.
        std::size_t look = pos_ + 1;
        while (look < text_.size() && std::isspace(static_cast<unsigned char>(text_[look]))) ++look;
        if (look >= text_.size() || text_[look] != '[') break;
        ++pos_;
        perm.generators.push_back(generator(degree));
      }
      return {std::move(perm)};
    }
    spec::Named named{name, {}};
    skip_space();
    if (peek() == ':') {
      ++pos_;
      named.params.push_back(number());
      while (true) {
        skip_space();
        if (peek() != ',' || !std::isdigit(static_cast<unsigned char>(peek_after_comma()))) break;
        ++pos_;
        named.params.push_back(number());
      }
    }
    return {std::move(named)};
  }

  char peek_after_comma() const {
    std::size_t look = pos_ + 1;
    while (look < text_.size() && std::isspace(static_cast<unsigned char>(text_[look]))) ++look;
    return look < text_.size() ? text_[look] : '\0';
  }

  Permutation generator(std::uint64_t degree) {
    std::vector<std::vector<std::uint32_t>> cycles;
    cycles.push_back(cycle());
    while (true) {
      skip_space();
      if (peek() != 'x') break;
      ++pos_;
      cycles.push_back(cycle());
    }
    try {
      return permutation_from_cycles(degree, cycles);
    } catch (const DomainError& e) {
      fail(e.what());
    }
  }

  std::vector<std::uint32_t> cycle() {
    expect('[');
    std::vector<std::uint32_t> points;
    while (true) {
      skip_space();
      if (peek() == ']') break;
      points.push_back(static_cast<std::uint32_t>(number()));
      skip_space();
      if (peek() == ',') ++pos_;
    }
    ++pos_;
    return points;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string cycles_to_string(const Permutation& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (seen[start] || p[start] == start) continue;
    if (!out.empty()) out += 'x';
    out += '[';
    std::size_t x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first) out += ' ';
      out += std::to_string(x);
      first = false;
      x = p[x];
    }
    out += ']';
  }
  return out.empty() ? "[]" : out;
}

// ---------------------------------------------------------------- named groups

using Params = std::vector<std::uint64_t>;

void check_order(std::size_t order, const BuildLimits& limits, const std::string& what) {
  if (order > limits.max_order) {
    throw CapExceededError(what + " has order " + std::to_string(order) + " above the bound " +
                           std::to_string(limits.max_order));
  }
}

void require_prime(std::uint64_t x, const char* role) {
  if (!is_prime(x)) throw DomainError(std::string(role) + " = " + std::to_string(x) + " is not prime");
}

/// Smallest i in [2, m) with multiplicative order exactly `order` mod m.
std::uint64_t unit_of_order(std::uint64_t m, std::uint64_t order) {
  for (std::uint64_t i = 2; i < m; ++i) {
    if (multiplicative_order(i, m) == order) return i;
  }
  throw DomainError("no unit of order " + std::to_string(order) + " modulo " + std::to_string(m));
}

using Matrix2 = std::array<std::uint64_t, 4>;  // row-major [[a b] [c d]]

Matrix2 mat_mul(const Matrix2& x, const Matrix2& y, std::uint64_t p) {
  return {(x[0] * y[0] + x[1] * y[2]) % p, (x[0] * y[1] + x[1] * y[3]) % p,
          (x[2] * y[0] + x[3] * y[2]) % p, (x[2] * y[1] + x[3] * y[3]) % p};
}

std::uint64_t mat_order(const Matrix2& m, std::uint64_t p) {
  const Matrix2 id = {1, 0, 0, 1};
  Matrix2 x = m;
  for (std::uint64_t k = 1; k <= p * p * p * p; ++k) {
    if (x == id) return k;
    x = mat_mul(x, m, p);
  }
  return 0;
}

/// Affine group {v -> M^k v + t} on the plane F_p^2, points x + p*y.
FiniteGroup affine_plane_group(std::uint64_t p, const Matrix2& m, const BuildLimits& limits) {
  const std::size_t degree = p * p;
  auto point = [p](std::uint64_t x, std::uint64_t y) { return static_cast<std::uint32_t>(x + p * y); };
  Permutation shift_x(degree), shift_y(degree), linear(degree);
  for (std::uint64_t y = 0; y < p; ++y) {
    for (std::uint64_t x = 0; x < p; ++x) {
      shift_x[point(x, y)] = point((x + 1) % p, y);
      shift_y[point(x, y)] = point(x, (y + 1) % p);
      linear[point(x, y)] = point((m[0] * x + m[1] * y) % p, (m[2] * x + m[3] * y) % p);
    }
  }
  const std::vector<Permutation> gens = {shift_x, shift_y, linear};
  return make_permutation_group(degree, gens, limits.max_order);
}

FiniteGroup semidirect_checked(std::uint64_t m, std::uint64_t k, std::uint64_t i, const BuildLimits& limits) {
  check_order(m * k, limits, "semidirect product");
  return make_semidirect_cyclic(m, k, i);
}

FiniteGroup product_checked(const FiniteGroup& a, const FiniteGroup& b, const BuildLimits& limits) {
  check_order(a.order() * b.order(), limits, "direct product");
  return make_direct_product(a, b);
}

FiniteGroup a4(const BuildLimits& limits) {
  const std::vector<Permutation> gens = {permutation_from_cycles(4, {{0, 1, 2}}),
                                         permutation_from_cycles(4, {{0, 1}, {2, 3}})};
  return make_permutation_group(4, gens, limits.max_order);
}

FiniteGroup s3(const BuildLimits&) { return make_dihedral(3); }

struct NamedBuilder {
  NamedGroupInfo info;
  std::size_t arity;
  std::function<FiniteGroup(const Params&, const BuildLimits&)> build;
};

const std::vector<NamedBuilder>& named_builders() {
  static const std::vector<NamedBuilder> builders = [] {
    std::vector<NamedBuilder> b;
    b.push_back({{"S3", "", "symmetric group of degree 3 (D:3)"}, 0,
                 [](const Params&, const BuildLimits& l) { return s3(l); }});
    b.push_back({{"D12", "", "dihedral group of order 12 (D:6)"}, 0,
                 [](const Params&, const BuildLimits&) { return make_dihedral(6); }});
    b.push_back({{"A4", "", "alternating group of degree 4"}, 0,
                 [](const Params&, const BuildLimits& l) { return a4(l); }});
    b.push_back({{"S4", "", "symmetric group of degree 4"}, 0, [](const Params&, const BuildLimits& l) {
                   const std::vector<Permutation> gens = {permutation_from_cycles(4, {{0, 1, 2, 3}}),
                                                          permutation_from_cycles(4, {{0, 1}})};
                   return make_permutation_group(4, gens, l.max_order);
                 }});
    b.push_back({{"Q8", "", "quaternion group, regular representation"}, 0,
                 [](const Params&, const BuildLimits& l) {
                   // Points 0..7 are 1, i, j, k, -1, -i, -j, -k; generators
                   // are left multiplication by i and by j.
                   const std::vector<Permutation> gens = {
                       permutation_from_cycles(8, {{0, 1, 4, 5}, {2, 3, 6, 7}}),
                       permutation_from_cycles(8, {{0, 2, 4, 6}, {1, 7, 5, 3}})};
                   return make_permutation_group(8, gens, l.max_order);
                 }});
    b.push_back({{"S3xS3", "", "S3 x S3, order 36"}, 0, [](const Params&, const BuildLimits& l) {
                   return product_checked(s3(l), s3(l), l);
                 }});
    b.push_back({{"Z3xA4", "", "Z3 x A4, order 36"}, 0, [](const Params&, const BuildLimits& l) {
                   return product_checked(make_cyclic(3), a4(l), l);
                 }});
    b.push_back({{"Z6xS3", "", "Z6 x S3, order 36"}, 0, [](const Params&, const BuildLimits& l) {
                   return product_checked(make_cyclic(6), s3(l), l);
                 }});
    b.push_back({{"Z9sZ4", "", "Z9 x| Z4 with b a b^-1 = a^8 (SD:9,4,8), order 36"}, 0,
                 [](const Params&, const BuildLimits& l) { return semidirect_checked(9, 4, 8, l); }});
    b.push_back({{"Z3Z3sZ4", "", "(Z3 x Z3) x| Z4, Z4 acting by an order-4 matrix, order 36"}, 0,
                 [](const Params&, const BuildLimits& l) {
                   return affine_plane_group(3, {0, 2, 1, 0}, l);
                 }});
    b.push_back({{"Z2Z2sZ9", "", "(Z2 x Z2) x| Z9, Z9 acting through Z3, order 36"}, 0,
                 [](const Params&, const BuildLimits& l) {
                   // Points 0..3 carry the affine plane over F_2, points
                   // 4..12 a regular Z9 that makes the action faithful.
                   Permutation translate = permutation_from_cycles(13, {{0, 1}, {2, 3}});
                   Permutation rotate = permutation_from_cycles(
                       13, {{1, 2, 3}, {4, 5, 6, 7, 8, 9, 10, 11, 12}});
                   const std::vector<Permutation> gens = {translate, rotate};
                   return make_permutation_group(13, gens, l.max_order);
                 }});
    b.push_back({{"Z2Z3Z3sZ2", "", "(Z2 x (Z3 x Z3)) x| Z2, inversion on Z3 x Z3, order 36"}, 0,
                 [](const Params&, const BuildLimits& l) {
                   return product_checked(make_cyclic(2), affine_plane_group(3, {2, 0, 0, 2}, l), l);
                 }});
    b.push_back({{"ZQP", "p,q", "Z_q x| Z_p, nonabelian (p | q-1), order pq"}, 2,
                 [](const Params& x, const BuildLimits& l) {
                   const auto p = x[0], q = x[1];
                   require_prime(p, "p");
                   require_prime(q, "q");
                   if ((q - 1) % p != 0) throw DomainError("ZQP requires p | q-1");
                   return semidirect_checked(q, p, unit_of_order(q, p), l);
                 }});
    b.push_back({{"G1", "p,q", "Z_q x| Z_{p^2}, generator acting with order p (p | q-1), order p^2 q"}, 2,
                 [](const Params& x, const BuildLimits& l) {
                   const auto p = x[0], q = x[1];
                   require_prime(p, "p");
                   require_prime(q, "q");
                   if ((q - 1) % p != 0) throw DomainError("G1 requires p | q-1");
                   return semidirect_checked(q, p * p, unit_of_order(q, p), l);
                 }});
    b.push_back({{"G2", "p,q", "(Z_q x| Z_p) x Z_p (p | q-1), order p^2 q"}, 2,
                 [](const Params& x, const BuildLimits& l) {
                   const auto p = x[0], q = x[1];
                   require_prime(p, "p");
                   require_prime(q, "q");
                   if ((q - 1) % p != 0) throw DomainError("G2 requires p | q-1");
                   return product_checked(semidirect_checked(q, p, unit_of_order(q, p), l), make_cyclic(p), l);
                 }});
    b.push_back({{"G3", "p,q", "Z_q x| Z_{p^2}, generator acting with order p^2 (p^2 | q-1), order p^2 q"}, 2,
                 [](const Params& x, const BuildLimits& l) {
                   const auto p = x[0], q = x[1];
                   require_prime(p, "p");
                   require_prime(q, "q");
                   if ((q - 1) % (p * p) != 0) throw DomainError("G3 requires p^2 | q-1");
                   return semidirect_checked(q, p * p, unit_of_order(q, p * p), l);
                 }});
    b.push_back({{"G4", "p,q", "Z_{p^2} x| Z_q, acting with order q (q | p-1), order p^2 q"}, 2,
                 [](const Params& x, const BuildLimits& l) {
                   const auto p = x[0], q = x[1];
                   require_prime(p, "p");
                   require_prime(q, "q");
                   if ((p - 1) % q != 0) throw DomainError("G4 requires q | p-1");
                   return semidirect_checked(p * p, q, unit_of_order(p * p, q), l);
                 }});
    b.push_back({{"G5", "p,q,t", "(Z_p x Z_p) x| Z_q acting by diag(i, i^t), ord_p(i) = q (q | p-1), order p^2 q"},
                 3, [](const Params& x, const BuildLimits& l) {
                   const auto p = x[0], q = x[1], t = x[2];
                   require_prime(p, "p");
                   require_prime(q, "q");
                   if ((p - 1) % q != 0) throw DomainError("G5 requires q | p-1");
                   check_order(p * p * q, l, "G5");
                   const auto i = unit_of_order(p, q);
                   return affine_plane_group(p, {i, 0, 0, pow_mod(i, t, p)}, l);
                 }});
    b.push_back({{"G6", "p,q", "(Z_p x Z_p) x| Z_q acting irreducibly (q | p+1, q does not divide p-1), order p^2 q"},
                 2, [](const Params& x, const BuildLimits& l) {
                   const auto p = x[0], q = x[1];
                   require_prime(p, "p");
                   require_prime(q, "q");
                   if ((p + 1) % q != 0 || (p - 1) % q == 0) {
                     throw DomainError("G6 requires q | p+1 and q not dividing p-1");
                   }
                   check_order(p * p * q, l, "G6");
                   for (std::uint64_t code = 0; code < p * p * p * p; ++code) {
                     const Matrix2 m = {code % p, code / p % p, code / (p * p) % p, code / (p * p * p)};
                     if (mat_order(m, p) == q) return affine_plane_group(p, m, l);
                   }
                   throw DomainError("no element of order q in GL_2(p)");
                 }});
    return b;
  }();
  return builders;
}

FiniteGroup build_node(const GroupSpec& s, const BuildLimits& limits) {
  return std::visit(
      [&](const auto& node) -> FiniteGroup {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, spec::Cyclic>) {
          if (node.n == 0) throw DomainError("Z:n requires n >= 1");
          check_order(node.n, limits, "Z:" + std::to_string(node.n));
          return make_cyclic(node.n);
        } else if constexpr (std::is_same_v<T, spec::Dihedral>) {
          check_order(2 * node.n, limits, "D:" + std::to_string(node.n));
          return make_dihedral(node.n);
        } else if constexpr (std::is_same_v<T, spec::Semidirect>) {
          return semidirect_checked(node.m, node.k, node.i, limits);
        } else if constexpr (std::is_same_v<T, spec::Product>) {
          return product_checked(build_node(*node.left, limits), build_node(*node.right, limits), limits);
        } else if constexpr (std::is_same_v<T, spec::Permutations>) {
          return make_permutation_group(node.degree, node.generators, limits.max_order);
        } else {
          for (const auto& b : named_builders()) {
            if (b.info.tag != node.tag) continue;
            if (node.params.size() != b.arity) {
              throw ParseError("named group " + node.tag + " takes " + std::to_string(b.arity) +
                               " parameter(s)");
            }
            return b.build(node.params, limits);
          }
          throw ParseError("unknown group name \"" + node.tag + "\"");
        }
      },
      s.node);
}

}  // namespace

GroupSpec parse_group_spec(std::string_view text) { return Parser(text).parse_all(); }

std::string to_string(const GroupSpec& s) {
  return std::visit(
      [](const auto& node) -> std::string {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, spec::Cyclic>) {
          return "Z:" + std::to_string(node.n);
        } else if constexpr (std::is_same_v<T, spec::Dihedral>) {
          return "D:" + std::to_string(node.n);
        } else if constexpr (std::is_same_v<T, spec::Semidirect>) {
          return "SD:" + std::to_string(node.m) + "," + std::to_string(node.k) + "," + std::to_string(node.i);
        } else if constexpr (std::is_same_v<T, spec::Product>) {
          return "X(" + to_string(*node.left) + "," + to_string(*node.right) + ")";
        } else if constexpr (std::is_same_v<T, spec::Permutations>) {
          std::string out = "PERM:" + std::to_string(node.degree) + ":";
          for (std::size_t i = 0; i < node.generators.size(); ++i) {
            if (i > 0) out += ',';
            out += cycles_to_string(node.generators[i]);
          }
          return out;
        } else {
          std::string out = node.tag;
          for (std::size_t i = 0; i < node.params.size(); ++i) {
            out += (i == 0 ? ':' : ',');
            out += std::to_string(node.params[i]);
          }
          return out;
        }
      },
      s.node);
}

FiniteGroup build_group(const GroupSpec& spec, const BuildLimits& limits) {
  return build_node(spec, limits).with_name(to_string(spec));
}

FiniteGroup build_group(std::string_view text, const BuildLimits& limits) {
  return build_group(parse_group_spec(text), limits);
}

const std::vector<NamedGroupInfo>& named_groups() {
  static const std::vector<NamedGroupInfo> infos = [] {
    std::vector<NamedGroupInfo> out;
    for (const auto& b : named_builders()) out.push_back(b.info);
    return out;
  }();
  return infos;
}

}  // namespace cpg
