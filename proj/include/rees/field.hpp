#pragma once

#include <concepts>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rees/errors.hpp"
#include "rees/number_field.hpp"
#include "rees/parse.hpp"
#include "rees/poly_algorithms.hpp"
#include "rees/rational.hpp"
#include "rees/rational_function.hpp"

namespace rees {

template <class K>
concept ExactField = requires(const K a, const K b, K c) {
  { a + b } -> std::convertible_to<K>;
  { a - b } -> std::convertible_to<K>;
  { a * b } -> std::convertible_to<K>;
  { a / b } -> std::convertible_to<K>;
  { -a } -> std::convertible_to<K>;
  { c += a } -> std::same_as<K&>;
  { a == b } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { to_string(a) } -> std::convertible_to<std::string>;
  K(1);
};

static_assert(ExactField<Rational>);
static_assert(ExactField<Algebraic>);
static_assert(ExactField<RationalFunction>);

enum class FieldKind { rationals, number_field, rational_function_field };

struct TowerLevel {
  std::string name;
  std::string minpoly;  ///< monic, in the generator names of this and earlier levels
};

struct FieldDescriptor {
  FieldKind kind = FieldKind::rationals;
  std::vector<TowerLevel> tower;
  std::vector<std::string> transcendentals;
  bool assume_irreducible = false;

  static FieldDescriptor rationals() { return {}; }
  static FieldDescriptor number_field(std::vector<TowerLevel> levels, bool assume_irreducible = false) {
    return {FieldKind::number_field, std::move(levels), {}, assume_irreducible};
  }
  static FieldDescriptor function_field(std::vector<std::string> names) {
    return {FieldKind::rational_function_field, {}, std::move(names), false};
  }
};

/// Arithmetic context built from a descriptor. Q and number fields use `Algebraic`
/// coefficients; Q(t) and Q(t, tstar) use `RationalFunction`.
class FieldContext {
 public:
  const FieldDescriptor& descriptor() const { return desc_; }
  FieldKind kind() const { return desc_.kind; }
  const Algebraic::Field& number_field() const { return nf_; }

  ConstantResolver<Algebraic> algebraic_constants() const {
    Algebraic::Field f = nf_;
    return [f](std::string_view name) -> std::optional<Algebraic> {
      if (!f) return std::nullopt;
      for (std::size_t i = 0; i < f->names().size(); ++i)
        if (f->names()[i] == name) return Algebraic::generator(f, i);
      return std::nullopt;
    };
  }

  ConstantResolver<RationalFunction> function_constants() const {
    std::vector<std::string> names = desc_.transcendentals;
    return [names](std::string_view name) -> std::optional<RationalFunction> {
      for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return i == 0 ? RationalFunction::t() : RationalFunction::tstar();
      return std::nullopt;
    };
  }

  Algebraic parse_algebraic(std::string_view s) const {
    return parse_constant<Algebraic>(s, algebraic_constants()).lifted(nf_);
  }

  /// Zero/one of the field, lifted into the tower when there is one.
  Algebraic zero() const { return Algebraic(0).lifted(nf_); }
  Algebraic one() const { return Algebraic(1).lifted(nf_); }

  friend FieldContext field_make(const FieldDescriptor& desc);

 private:
  FieldDescriptor desc_;
  Algebraic::Field nf_;
};

inline FieldContext field_make(const FieldDescriptor& desc) {
  FieldContext ctx;
  ctx.desc_ = desc;
  switch (desc.kind) {
    case FieldKind::rationals:
      break;
    case FieldKind::rational_function_field:
      if (desc.transcendentals.empty() || desc.transcendentals.size() > 2)
        throw error(errc::invalid_input, "function field needs one or two transcendentals");
      break;
    case FieldKind::number_field: {
      if (desc.tower.empty() || desc.tower.size() > 2) throw error(errc::invalid_input, "tower depth must be 1 or 2");
      Vars v1 = make_vars({desc.tower[0].name});
      Poly<Rational> p1 = parse_poly<Rational>(desc.tower[0].minpoly, v1);
      QUnivariate m1(static_cast<std::size_t>(std::max(p1.total_degree(), 0)) + 1, Rational(0));
      for (const auto& [m, c] : p1.terms()) m1[m[0]] = c;
      if (desc.tower.size() == 1) {
        ctx.nf_ = NumberField::make({desc.tower[0].name}, m1, {}, desc.assume_irreducible);
        break;
      }
      auto f1 = NumberField::make({desc.tower[0].name}, m1, {}, desc.assume_irreducible);
      Vars v2 = make_vars({desc.tower[0].name, desc.tower[1].name});
      Poly<Rational> p2 = parse_poly<Rational>(desc.tower[1].minpoly, v2);
      auto coeffs = coefficients_in(p2, 1);
      std::vector<QVec> m2;
      for (const auto& c : coeffs) {
        Algebraic acc = Algebraic(0).lifted(f1);
        for (const auto& [m, q] : c.terms()) {
          Algebraic term = Algebraic(q).lifted(f1);
          for (unsigned k = 0; k < m[0]; ++k) term *= Algebraic::generator(f1, 0);
          acc += term;
        }
        m2.push_back(acc.coords());
      }
      ctx.nf_ = NumberField::make({desc.tower[0].name, desc.tower[1].name}, m1, m2, desc.assume_irreducible);
      break;
    }
  }
  return ctx;
}

/// Images of a list of constants under the known automorphisms of their field (identity first).
inline std::vector<std::vector<Algebraic>> conjugate_images(const std::vector<Algebraic>& xs) {
  Algebraic::Field f;
  for (const auto& x : xs)
    if (x.field()) f = x.field();
  if (!f) return {xs};
  std::vector<std::vector<Algebraic>> out;
  for (std::size_t k = 0; k < f->automorphism_count(); ++k) {
    std::vector<Algebraic> img;
    for (const auto& x : xs) img.emplace_back(f, f->apply_automorphism(k, x.lifted(f).coords()));
    out.push_back(std::move(img));
  }
  return out;
}

template <class K>
std::vector<std::vector<K>> conjugate_images(const std::vector<K>& xs) {
  return {xs};
}

template <class K>
std::size_t generated_degree(const std::vector<K>&) {
  return 1;
}

}  // namespace rees
