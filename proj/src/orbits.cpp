#include "cdi/orbits.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>

#include "cdi/error.hpp"
#include "cdi/fixture_format.hpp"

namespace cdi {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 1) throw Error(Errc::invalid_argument, "partition part " + std::to_string(p) + " < 1");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

int Partition::size() const noexcept {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

int Partition::multiplicity(int part) const noexcept {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

namespace {

int parse_positive(std::string_view s, std::string_view whole) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || v < 1) {
    throw Error(Errc::parse_error, "bad partition '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

Partition Partition::parse(std::string_view text) {
  std::string cleaned;
  for (char c : text) {
    if (c == ' ' || c == '(' || c == ')' || c == '{' || c == '}') continue;
    cleaned += c;
  }
  if (cleaned.empty()) throw Error(Errc::parse_error, "empty partition");
  std::vector<int> parts;
  std::string_view rest = cleaned;
  for (;;) {
    const std::size_t comma = rest.find(',');
    const std::string_view term = rest.substr(0, comma);
    const std::size_t caret = term.find('^');
    const int part = parse_positive(term.substr(0, caret), text);
    const int mult = caret == std::string_view::npos ? 1 : parse_positive(term.substr(caret + 1), text);
    parts.insert(parts.end(), static_cast<std::size_t>(mult), part);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return Partition(std::move(parts));
}

std::string Partition::render() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size();) {
    std::size_t j = i;
    while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
    if (!out.empty()) out += ',';
    out += std::to_string(parts_[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

Partition transpose_partition(const Partition& p) {
  std::vector<int> out;
  const auto& parts = p.parts();
  const int largest = parts.empty() ? 0 : parts.front();
  for (int j = 1; j <= largest; ++j) {
    out.push_back(static_cast<int>(
        std::count_if(parts.begin(), parts.end(), [j](int x) { return x >= j; })));
  }
  return Partition(std::move(out));
}

OrbitLabel OrbitLabel::parse_classical(std::string_view text) {
  std::optional<VeryEvenTag> tag;
  if (text.size() > 2 && text[text.size() - 2] == '_') {
    const char t = text.back();
    if (t == '1') tag = VeryEvenTag::I;
    else if (t == '2') tag = VeryEvenTag::II;
    else throw Error(Errc::parse_error, "bad orbit tag in '" + std::string(text) + "'");
    text.remove_suffix(2);
  }
  return ClassicalOrbit{Partition::parse(text), tag};
}

std::string OrbitLabel::render() const {
  if (is_classical()) {
    const auto& c = classical();
    std::string out = c.partition.render();
    if (c.tag) out += *c.tag == VeryEvenTag::I ? "_1" : "_2";
    return out;
  }
  return by_diagram().diagram.render();
}

std::string OrbitLabel::tag_name() const {
  if (!is_classical() || !classical().tag) return {};
  return *classical().tag == VeryEvenTag::I ? "I" : "II";
}

namespace {

int expected_size(CartanType t) {
  switch (t.family) {
    case Family::A: return t.rank + 1;
    case Family::B: return 2 * t.rank + 1;
    case Family::C: return 2 * t.rank;
    case Family::D: return 2 * t.rank;
    default: break;
  }
  throw Error(Errc::unsupported_type, t.name() + " orbits are not labelled by partitions");
}

}  // namespace

bool is_admissible(const Partition& p, CartanType type) {
  if (p.size() != expected_size(type)) return false;
  for (int part : p.parts()) {
    const int m = p.multiplicity(part);
    switch (type.family) {
      case Family::B:
      case Family::D:
        if (part % 2 == 0 && m % 2 != 0) return false;
        break;
      case Family::C:
        if (part % 2 != 0 && m % 2 != 0) return false;
        break;
      default: break;
    }
  }
  return true;
}

bool is_very_even(const Partition& p, CartanType type) {
  if (type.family != Family::D || !is_admissible(p, type)) return false;
  return std::all_of(p.parts().begin(), p.parts().end(),
                     [&p](int part) { return part % 2 == 0 && p.multiplicity(part) % 2 == 0; });
}

std::vector<OrbitLabel> enumerate_orbits(CartanType type) {
  type.validate();
  const int n = expected_size(type);
  std::vector<Partition> all;
  std::vector<int> cur;
  // Reverse-lexicographic generation: largest first part first.
  std::function<void(int, int)> gen = [&](int remaining, int max_part) {
    if (remaining == 0) {
      all.emplace_back(cur);
      return;
    }
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
      cur.push_back(k);
      gen(remaining - k, k);
      cur.pop_back();
    }
  };
  gen(n, n);
  std::vector<OrbitLabel> out;
  for (const auto& p : all) {
    if (!is_admissible(p, type)) continue;
    if (is_very_even(p, type)) {
      out.emplace_back(ClassicalOrbit{p, VeryEvenTag::I});
      out.emplace_back(ClassicalOrbit{p, VeryEvenTag::II});
    } else {
      out.emplace_back(ClassicalOrbit{p, std::nullopt});
    }
  }
  return out;
}

WeightedDynkinDiagram diagram_from_partition(const Partition& p, CartanType type,
                                             std::optional<VeryEvenTag> tag) {
  type.validate();
  if (!is_admissible(p, type)) {
    throw Error(Errc::inadmissible_partition, p.render() + " for " + type.name());
  }
  if (is_very_even(p, type) != tag.has_value()) {
    throw Error(Errc::inadmissible_partition,
                p.render() + (tag ? " carries a tag but is not very even" : " is very even and needs a tag"));
  }
  // Eigenvalues of h on the natural representation.
  std::vector<int> h;
  for (int part : p.parts())
    for (int v = part - 1; v >= 1 - part; v -= 2) h.push_back(v);
  std::sort(h.begin(), h.end(), std::greater<>());

  const int n = type.rank;
  std::vector<int> labels;
  if (type.family == Family::A) {
    for (std::size_t i = 0; i + 1 < h.size(); ++i) labels.push_back(h[i] - h[i + 1]);
    return WeightedDynkinDiagram(std::move(labels));
  }
  for (int i = 0; i + 1 < n; ++i) labels.push_back(h[i] - h[i + 1]);
  switch (type.family) {
    case Family::B: labels.push_back(h[n - 1]); break;
    case Family::C: labels.push_back(2 * h[n - 1]); break;
    case Family::D: {
      labels[n - 2] = h[n - 2] - h[n - 1];
      labels.push_back(h[n - 2] + h[n - 1]);
      if (tag == VeryEvenTag::II) std::swap(labels[n - 2], labels[n - 1]);
      break;
    }
    default: break;
  }
  return WeightedDynkinDiagram(std::move(labels));
}

std::vector<WeightedDynkinDiagram> exceptional_orbit_diagrams(CartanType type) {
  type.validate();
  if (is_classical(type.family)) {
    throw Error(Errc::unsupported_type, type.name() + " is classical; use enumerate_orbits");
  }
  std::vector<WeightedDynkinDiagram> out;
  for (const auto& row : load_raw_fixture(type).rows) out.emplace_back(row.diagram);
  return out;
}

std::vector<Orbit> orbits_with_diagrams(CartanType type) {
  std::vector<Orbit> out;
  if (is_classical(type.family)) {
    for (auto& label : enumerate_orbits(type)) {
      const auto& c = label.classical();
      auto h = diagram_from_partition(c.partition, type, c.tag);
      out.push_back(Orbit{std::move(label), std::move(h)});
    }
  } else {
    const auto diagrams = exceptional_orbit_diagrams(type);
    for (std::size_t i = 0; i < diagrams.size(); ++i) {
      out.push_back(Orbit{DiagramOrbit{i, diagrams[i]}, diagrams[i]});
    }
  }
  return out;
}

Orbit orbit_from_label(const OrbitLabel& label, CartanType type) {
  if (label.is_classical()) {
    const auto& c = label.classical();
    return Orbit{label, diagram_from_partition(c.partition, type, c.tag)};
  }
  if (label.by_diagram().diagram.rank() != type.rank) {
    throw Error(Errc::rank_mismatch, "diagram " + label.render() + " for " + type.name());
  }
  return Orbit{label, label.by_diagram().diagram};
}

}  // namespace cdi
