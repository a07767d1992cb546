#include "sigrho/sigma_rho.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace sigrho {

NatSet::NatSet(bool cofinite, std::vector<unsigned> listed) : cofinite_(cofinite), listed_(std::move(listed)) {
  std::sort(listed_.begin(), listed_.end());
  listed_.erase(std::unique(listed_.begin(), listed_.end()), listed_.end());
}

NatSet NatSet::finite(std::vector<unsigned> members) { return NatSet(false, std::move(members)); }
NatSet NatSet::cofinite(std::vector<unsigned> complement) { return NatSet(true, std::move(complement)); }

namespace {

std::string trim(std::string_view s) {
  std::size_t a = s.find_first_not_of(" \t");
  if (a == std::string_view::npos) return {};
  std::size_t b = s.find_last_not_of(" \t");
  return std::string(s.substr(a, b - a + 1));
}

std::vector<unsigned> parse_list(std::string_view text) {
  std::vector<unsigned> out;
  std::string t = trim(text);
  if (t.empty()) return out;
  std::size_t pos = 0;
  while (pos <= t.size()) {
    std::size_t end = t.find(',', pos);
    if (end == std::string::npos) end = t.size();
    std::string item = trim(std::string_view(t).substr(pos, end - pos));
    unsigned v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw std::invalid_argument("invalid natural number '" + item + "' in set");
    }
    out.push_back(v);
    if (end == t.size()) break;
    pos = end + 1;
  }
  return out;
}

std::string join_list(const std::vector<unsigned>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

NatSet NatSet::parse(std::string_view text) {
  std::string t = trim(text);
  if (t == "N" || t == "naturals" || t == "all") return naturals();
  constexpr std::string_view prefix = "cofinite:";
  if (t.rfind(prefix, 0) == 0) return cofinite(parse_list(std::string_view(t).substr(prefix.size())));
  if (t == "{}" || t == "empty") return finite({});
  return finite(parse_list(t));
}

bool NatSet::contains(std::uint64_t x) const {
  bool listed = std::binary_search(listed_.begin(), listed_.end(), x);
  return cofinite_ ? !listed : listed;
}

std::string NatSet::to_string() const {
  if (cofinite_) return listed_.empty() ? "N" : "cofinite:" + join_list(listed_);
  return listed_.empty() ? "{}" : join_list(listed_);
}

namespace {

SideLayout make_layout(const NatSet& set, std::size_t first) {
  SideLayout l;
  l.cofinite = set.is_cofinite();
  l.first_digit = first;
  if (set.is_cofinite()) {
    l.ell = set.listed().empty() ? 0 : set.listed().back() + 1;
    l.num_labels = l.ell + 1;
    l.has_top = true;
    l.top_digit = first + l.ell;
    l.modulus = l.ell;
  } else {
    l.ell = set.listed().empty() ? 0 : set.listed().back();
    l.num_labels = l.ell + 1;
    l.modulus = l.num_labels;
  }
  return l;
}

}  // namespace

SigmaRhoSpec::SigmaRhoSpec(NatSet sigma, NatSet rho, std::string name)
    : name_(std::move(name)), sigma_(std::move(sigma)), rho_(std::move(rho)) {
  sig_ = make_layout(sigma_, 0);
  rho_layout_ = make_layout(rho_, sig_.num_labels);
  for (Side side : {Side::sigma, Side::rho}) {
    const SideLayout& l = layout(side);
    const NatSet& set = this->set(side);
    for (std::size_t i = 0; i < l.num_labels; ++i) {
      bool top = l.has_top && i == l.ell;
      labels_.push_back(Label{side, static_cast<unsigned>(i), top});
      valid_.push_back(top || set.contains(i));
    }
  }
  if (name_.empty()) name_ = describe();
}

std::size_t SigmaRhoSpec::digit(const Label& label) const {
  const SideLayout& l = layout(label.side);
  if (label.at_least) {
    if (!l.has_top || label.count != l.ell) throw std::invalid_argument("label not in alphabet");
    return l.top_digit;
  }
  if (label.count >= l.modulus) throw std::invalid_argument("label not in alphabet");
  return l.first_digit + label.count;
}

std::optional<std::size_t> SigmaRhoSpec::successor(std::size_t d) const {
  const Label& lab = labels_[d];
  const SideLayout& l = layout(lab.side);
  if (lab.at_least) return d;
  if (lab.count + 1 < l.modulus) return d + 1;
  if (l.has_top) return l.top_digit;
  return std::nullopt;
}

std::optional<std::size_t> SigmaRhoSpec::add(std::size_t a, std::size_t b) const {
  const Label& la = labels_[a];
  const Label& lb = labels_[b];
  if (la.side != lb.side) return std::nullopt;
  const SideLayout& l = layout(la.side);
  if (la.at_least || lb.at_least) return l.top_digit;
  const std::size_t sum = la.count + lb.count;
  if (sum < l.modulus) return l.first_digit + sum;
  if (l.has_top) return l.top_digit;
  return std::nullopt;
}

std::string SigmaRhoSpec::label_name(std::size_t d) const {
  const Label& lab = labels_[d];
  return std::string(lab.at_least ? "|>=" : "|") + std::to_string(lab.count) + (lab.side == Side::sigma ? "|s" : "|r");
}

std::string SigmaRhoSpec::describe() const { return "sigma=" + sigma_.to_string() + " rho=" + rho_.to_string(); }

namespace {

std::vector<unsigned> range_to(unsigned hi) {
  std::vector<unsigned> v;
  for (unsigned i = 0; i <= hi; ++i) v.push_back(i);
  return v;
}

}  // namespace

const std::vector<std::string>& SigmaRhoSpec::preset_names() {
  static const std::vector<std::string> names = {
      "independent_set",           "dominating_set",
      "strong_stable_set",         "perfect_code",
      "independent_dominating_set", "perfect_dominating_set",
      "total_dominating_set",      "total_perfect_dominating_set",
      "nearly_perfect_set",        "total_nearly_perfect_set",
      "weakly_perfect_dominating_set", "induced_bounded_degree",
      "p_dominating_set",          "induced_p_regular",
  };
  return names;
}

SigmaRhoSpec SigmaRhoSpec::preset(std::string_view name, unsigned p) {
  using S = NatSet;
  const std::string n(name);
  auto make = [&](NatSet s, NatSet r) { return SigmaRhoSpec(std::move(s), std::move(r), n); };
  if (n == "independent_set") return make(S::finite({0}), S::naturals());
  if (n == "dominating_set") return make(S::naturals(), S::cofinite({0}));
  if (n == "strong_stable_set") return make(S::finite({0}), S::finite({0, 1}));
  if (n == "perfect_code") return make(S::finite({0}), S::finite({1}));
  if (n == "independent_dominating_set") return make(S::finite({0}), S::cofinite({0}));
  if (n == "perfect_dominating_set") return make(S::naturals(), S::finite({1}));
  if (n == "total_dominating_set") return make(S::cofinite({0}), S::cofinite({0}));
  if (n == "total_perfect_dominating_set") return make(S::finite({1}), S::finite({1}));
  if (n == "nearly_perfect_set") return make(S::naturals(), S::finite({0, 1}));
  if (n == "total_nearly_perfect_set") return make(S::finite({0, 1}), S::finite({0, 1}));
  if (n == "weakly_perfect_dominating_set") return make(S::finite({0, 1}), S::finite({1}));
  const std::string tagged = n + "(" + std::to_string(p) + ")";
  if (n == "induced_bounded_degree") return SigmaRhoSpec(S::finite(range_to(p)), S::naturals(), tagged);
  if (n == "p_dominating_set") {
    if (p == 0) throw std::invalid_argument("p_dominating_set needs p >= 1");
    return SigmaRhoSpec(S::naturals(), S::cofinite(range_to(p - 1)), tagged);
  }
  if (n == "induced_p_regular") return SigmaRhoSpec(S::finite({p}), S::naturals(), tagged);
  throw std::invalid_argument("unknown problem preset '" + n + "'");
}

SigmaRhoSpec SigmaRhoSpec::parse(std::string_view text) {
  std::string t = trim(text);
  if (t.find('=') != std::string::npos) {
    std::istringstream in(t);
    std::string tok;
    std::optional<NatSet> sigma, rho;
    while (in >> tok) {
      auto eq = tok.find('=');
      if (eq == std::string::npos) throw std::invalid_argument("expected key=value in problem, got '" + tok + "'");
      std::string key = tok.substr(0, eq);
      NatSet value = NatSet::parse(tok.substr(eq + 1));
      if (key == "sigma") {
        sigma = value;
      } else if (key == "rho") {
        rho = value;
      } else {
        throw std::invalid_argument("unknown problem key '" + key + "'");
      }
    }
    if (!sigma || !rho) throw std::invalid_argument("explicit problems need both sigma= and rho=");
    return SigmaRhoSpec(*sigma, *rho);
  }
  auto open = t.find('(');
  if (open != std::string::npos) {
    if (t.back() != ')') throw std::invalid_argument("malformed preset parameter in '" + t + "'");
    std::string arg = t.substr(open + 1, t.size() - open - 2);
    unsigned p = 0;
    auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), p);
    if (arg.empty() || ec != std::errc() || ptr != arg.data() + arg.size()) {
      throw std::invalid_argument("invalid preset parameter '" + arg + "'");
    }
    return preset(t.substr(0, open), p);
  }
  return preset(t);
}

Variant parse_variant(std::string_view text) {
  const std::string t = trim(text);
  if (t == "existence" || t == "exists" || t == "decide") return Variant::existence;
  if (t == "min" || t == "minimise" || t == "minimize") return Variant::minimise;
  if (t == "max" || t == "maximise" || t == "maximize") return Variant::maximise;
  if (t == "count") return Variant::count;
  if (t == "count_min" || t == "count_minimise" || t == "count_minimize") return Variant::count_minimise;
  if (t == "count_max" || t == "count_maximise" || t == "count_maximize") return Variant::count_maximise;
  throw std::invalid_argument("unknown variant '" + t + "'");
}

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::existence: return "existence";
    case Variant::minimise: return "min";
    case Variant::maximise: return "max";
    case Variant::count: return "count";
    case Variant::count_minimise: return "count_min";
    case Variant::count_maximise: return "count_max";
  }
  return "unknown";
}

const std::vector<Variant>& all_variants() {
  static const std::vector<Variant> v = {Variant::existence, Variant::minimise,       Variant::maximise,
                                         Variant::count,     Variant::count_minimise, Variant::count_maximise};
  return v;
}

bool is_counting(Variant v) {
  return v == Variant::count || v == Variant::count_minimise || v == Variant::count_maximise;
}

bool is_optimisation(Variant v) {
  return v == Variant::minimise || v == Variant::maximise || v == Variant::count_minimise ||
         v == Variant::count_maximise;
}

std::string Answer::to_string() const {
  switch (variant) {
    case Variant::existence: return feasible ? "true" : "false";
    case Variant::count: return count.str();
    case Variant::minimise:
    case Variant::maximise: return feasible ? std::to_string(*size) : "infeasible";
    case Variant::count_minimise:
    case Variant::count_maximise: return feasible ? std::to_string(*size) + " " + count.str() : "infeasible";
  }
  return {};
}

}  // namespace sigrho
