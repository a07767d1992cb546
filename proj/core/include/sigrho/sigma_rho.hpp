#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sigrho/modring.hpp"

namespace sigrho {

/// A finite subset of N, or the complement of one.
class NatSet {
 public:
  static NatSet finite(std::vector<unsigned> members);
  static NatSet cofinite(std::vector<unsigned> complement);
  static NatSet naturals() { return cofinite({}); }

  /// "0,1", "cofinite:0", "N" (all naturals) or "" (the empty set).
  static NatSet parse(std::string_view text);

  bool is_cofinite() const { return cofinite_; }
  /// Members of a finite set, or the complement of a cofinite one. Sorted.
  const std::vector<unsigned>& listed() const { return listed_; }
  bool contains(std::uint64_t x) const;
  std::string to_string() const;

  friend bool operator==(const NatSet&, const NatSet&) = default;

 private:
  NatSet(bool cofinite, std::vector<unsigned> listed);
  bool cofinite_ = false;
  std::vector<unsigned> listed_;
};

enum class Side : std::uint8_t { sigma, rho };

struct Label {
  Side side = Side::sigma;
  unsigned count = 0;
  bool at_least = false;

  friend bool operator==(const Label&, const Label&) = default;
};

/// Where one side's labels live in the digit alphabet.
///
/// Finite side with maximum l: digits for |0|..|l|, no top.
/// Cofinite side with l = max(complement) + 1: digits |0|..|l-1| then the top
/// |>=l|. The naturals are the cofinite case l = 0 (a lone top |>=0|).
struct SideLayout {
  bool cofinite = false;
  unsigned ell = 0;
  std::size_t first_digit = 0;
  std::size_t num_labels = 0;
  bool has_top = false;
  std::size_t top_digit = 0;
  /// Number of non-top labels: the cyclic modulus the Fourier join uses.
  std::size_t modulus = 0;
};

/// A [sigma, rho] problem with its label alphabet. Digits enumerate the sigma
/// labels first, then the rho labels.
class SigmaRhoSpec {
 public:
  SigmaRhoSpec(NatSet sigma, NatSet rho, std::string name = {});

  /// A preset name such as "dominating_set" or "induced_p_regular(3)", or an
  /// explicit "sigma=<set> rho=<set>" description.
  static SigmaRhoSpec parse(std::string_view text);
  /// Parameterised presets take p; the others ignore it.
  static SigmaRhoSpec preset(std::string_view name, unsigned p = 2);
  static const std::vector<std::string>& preset_names();

  const std::string& name() const { return name_; }
  const NatSet& sigma() const { return sigma_; }
  const NatSet& rho() const { return rho_; }
  const NatSet& set(Side side) const { return side == Side::sigma ? sigma_ : rho_; }
  const SideLayout& layout(Side side) const { return side == Side::sigma ? sig_ : rho_layout_; }

  std::size_t num_labels() const { return labels_.size(); }
  const Label& label(std::size_t digit) const { return labels_[digit]; }
  std::size_t digit(const Label& label) const;
  Side side_of(std::size_t digit) const { return labels_[digit].side; }
  bool is_sigma(std::size_t digit) const { return labels_[digit].side == Side::sigma; }
  bool is_top(std::size_t digit) const { return labels_[digit].at_least; }
  /// |0| or |>=0| of the side.
  std::size_t zero_digit(Side side) const { return layout(side).first_digit; }

  /// Whether a vertex may finish with this label.
  bool valid(std::size_t digit) const { return valid_[digit]; }

  /// Label after gaining one more sigma neighbour; nullopt if no label fits.
  /// For the top label this is the top label again.
  std::optional<std::size_t> successor(std::size_t digit) const;

  /// Join-side combination of two labels (counts add, saturating into the top
  /// label). nullopt when the sides differ or the sum leaves a finite side.
  std::optional<std::size_t> add(std::size_t a, std::size_t b) const;

  std::string label_name(std::size_t digit) const;
  /// "sigma=<set> rho=<set>".
  std::string describe() const;

 private:
  std::string name_;
  NatSet sigma_;
  NatSet rho_;
  SideLayout sig_;
  SideLayout rho_layout_;
  std::vector<Label> labels_;
  std::vector<bool> valid_;
};

enum class Variant { existence, minimise, maximise, count, count_minimise, count_maximise };

Variant parse_variant(std::string_view text);
std::string_view to_string(Variant v);
const std::vector<Variant>& all_variants();

bool is_counting(Variant v);
bool is_optimisation(Variant v);

struct Answer {
  Variant variant = Variant::existence;
  bool feasible = false;
  /// Optimum size for (count_)minimise / (count_)maximise when feasible.
  std::optional<std::int64_t> size;
  /// Number of solutions (count) or of optimal solutions (count_min/max).
  BigInt count = 0;

  /// "true"/"false", "<size>", "<count>", "<size> <count>" or "infeasible".
  std::string to_string() const;

  friend bool operator==(const Answer& a, const Answer& b) {
    return a.variant == b.variant && a.feasible == b.feasible && a.size == b.size && a.count == b.count;
  }
};

}  // namespace sigrho
