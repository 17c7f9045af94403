#include "cdi/diagram.hpp"

#include <algorithm>
#include <charconv>

namespace cdi {

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  if (text.empty()) throw Error(Errc::parse_error, "empty integer list");
  if (text.find(',') == std::string_view::npos &&
      std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    for (char c : text) out.push_back(c - '0');
    return out;
  }
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = text.substr(pos, comma - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
      throw Error(Errc::parse_error, "bad integer '" + std::string(item) + "' in '" +
                                         std::string(text) + "'");
    }
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

std::string render_int_list(std::span<const int> values) {
  const bool compact =
      std::all_of(values.begin(), values.end(), [](int v) { return v >= 0 && v <= 9; });
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!compact && i > 0) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

std::string render_weight(const Weight& w) {
  return render_int_list(std::span<const int>(w.begin(), w.end()));
}

WeightedDynkinDiagram::WeightedDynkinDiagram(std::vector<int> labels) : labels_(std::move(labels)) {
  if (labels_.empty() || labels_.size() > static_cast<std::size_t>(kMaxRank)) {
    throw Error(Errc::invalid_rank, "diagram with " + std::to_string(labels_.size()) + " nodes");
  }
  for (int v : labels_) {
    if (v < 0 || v > 2) {
      throw Error(Errc::invalid_argument, "diagram label " + std::to_string(v) + " not in {0,1,2}");
    }
  }
}

WeightedDynkinDiagram WeightedDynkinDiagram::parse(std::string_view text) {
  return WeightedDynkinDiagram(parse_int_list(text));
}

Weight WeightedDynkinDiagram::as_weight() const { return Weight::from(labels_); }

bool is_even(const WeightedDynkinDiagram& h) {
  return std::none_of(h.labels().begin(), h.labels().end(), [](int v) { return v == 1; });
}

}  // namespace cdi
