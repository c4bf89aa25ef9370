#ifndef SUPERLIE_VARSPEC_HPP
#define SUPERLIE_VARSPEC_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "superlie/rational.hpp"

namespace superlie {

enum class Parity : std::uint8_t { Even = 0, Odd = 1 };

constexpr Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}
constexpr int bit(Parity p) { return static_cast<int>(p); }
constexpr Parity parity_of(int k) { return (k & 1) ? Parity::Odd : Parity::Even; }
/// (-1)^{a b}
constexpr int sign_of(Parity a, Parity b) { return (bit(a) & bit(b)) ? -1 : 1; }
/// (-1)^{a}
constexpr int sign_of(Parity a) { return bit(a) ? -1 : 1; }

enum class VarKind : std::uint8_t { Indeterminate, Parameter };

struct VarEntry {
  std::string name;
  Parity parity = Parity::Even;
  VarKind kind = VarKind::Indeterminate;
  /// 0 means no truncation; k means x^k = 0. Odd entries are always nil2.
  int nilpotent = 0;
};

/// Ordered list of generators. The declaration order is the canonical
/// order in which odd factors of a monomial are stored.
class VarSpec {
 public:
  static constexpr std::size_t kMaxVars = 32;

  explicit VarSpec(std::vector<VarEntry> entries) : entries_(std::move(entries)) {
    if (entries_.size() > kMaxVars) throw AlgebraError("too many variables");
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      auto& e = entries_[i];
      if (e.name.empty()) throw AlgebraError("empty variable name");
      for (std::size_t j = 0; j < i; ++j)
        if (entries_[j].name == e.name) throw AlgebraError("duplicate variable: " + e.name);
      if (e.parity == Parity::Odd) {
        odd_mask_ |= (1u << i);
        e.nilpotent = 2;
      }
      if (e.nilpotent < 0 || e.nilpotent == 1) throw AlgebraError("bad nilpotency for " + e.name);
      if (e.kind == VarKind::Parameter) param_mask_ |= (1u << i);
    }
  }

  std::size_t size() const { return entries_.size(); }
  const VarEntry& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<VarEntry>& entries() const { return entries_; }

  bool is_odd(std::size_t i) const { return (odd_mask_ >> i) & 1u; }
  bool is_param(std::size_t i) const { return (param_mask_ >> i) & 1u; }
  Parity parity(std::size_t i) const { return is_odd(i) ? Parity::Odd : Parity::Even; }
  std::uint32_t odd_mask() const { return odd_mask_; }
  std::uint32_t param_mask() const { return param_mask_; }

  std::optional<std::size_t> find(std::string_view name) const {
    for (std::size_t i = 0; i < entries_.size(); ++i)
      if (entries_[i].name == name) return i;
    return std::nullopt;
  }
  std::size_t index(std::string_view name) const {
    auto i = find(name);
    if (!i) throw AlgebraError("unknown variable: " + std::string(name));
    return *i;
  }

  std::vector<std::size_t> indeterminates() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size(); ++i)
      if (!is_param(i)) out.push_back(i);
    return out;
  }

  bool operator==(const VarSpec& o) const {
    if (entries_.size() != o.entries_.size()) return false;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      const auto& a = entries_[i];
      const auto& b = o.entries_[i];
      if (a.name != b.name || a.parity != b.parity || a.kind != b.kind || a.nilpotent != b.nilpotent)
        return false;
    }
    return true;
  }

 private:
  std::vector<VarEntry> entries_;
  std::uint32_t odd_mask_ = 0;
  std::uint32_t param_mask_ = 0;
};

using VarSpecPtr = std::shared_ptr<const VarSpec>;

inline bool same_spec(const VarSpecPtr& a, const VarSpecPtr& b) {
  return a == b || (a && b && *a == *b);
}

class VarSpecBuilder {
 public:
  VarSpecBuilder& even(std::string name) {
    entries_.push_back({std::move(name), Parity::Even, VarKind::Indeterminate, 0});
    return *this;
  }
  VarSpecBuilder& odd(std::string name) {
    entries_.push_back({std::move(name), Parity::Odd, VarKind::Indeterminate, 2});
    return *this;
  }
  VarSpecBuilder& var(std::string name, Parity p) {
    return p == Parity::Odd ? odd(std::move(name)) : even(std::move(name));
  }
  VarSpecBuilder& param(std::string name, Parity p, int nilpotent = 0) {
    entries_.push_back({std::move(name), p, VarKind::Parameter, nilpotent});
    return *this;
  }
  VarSpecBuilder& entry(VarEntry e) {
    entries_.push_back(std::move(e));
    return *this;
  }
  VarSpecPtr build() const { return std::make_shared<const VarSpec>(entries_); }

 private:
  std::vector<VarEntry> entries_;
};

}  // namespace superlie

#endif  // SUPERLIE_VARSPEC_HPP
