#include "eqvb/grid.hpp"

#include <charconv>

#include "eqvb/error.hpp"

namespace eqvb {

namespace {

int parse_int(std::string_view s, std::string_view whole) {
  int value = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw Error(ErrorKind::Parse, "bad integer '" + std::string(s) + "' in grid '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

LabelGrid LabelGrid::parse(std::string_view text) {
  LabelGrid grid;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    const std::string_view item = text.substr(pos, comma - pos);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw Error(ErrorKind::Parse, "grid item '" + std::string(item) + "' lacks '='");
    const std::string key(item.substr(0, eq));
    const std::string_view range = item.substr(eq + 1);
    const auto dots = range.find("..");
    int lo = 0;
    int hi = 0;
    if (dots == std::string_view::npos) {
      lo = hi = parse_int(range, text);
    } else {
      lo = parse_int(range.substr(0, dots), text);
      hi = parse_int(range.substr(dots + 2), text);
    }
    grid.set(key, lo, hi);
    pos = comma + 1;
  }
  return grid;
}

void LabelGrid::set(const std::string& key, int lo, int hi) {
  if (key != "n" && key != "m" && key != "n2" && key != "m2") {
    throw Error(ErrorKind::Parse, "unknown grid key '" + key + "' (expected n, m, n2, m2)");
  }
  if ((key == "n" || key == "n2") && lo < 0) throw Error(ErrorKind::InvalidArgument, "grid range for " + key + " must be nonnegative");
  ranges_[key] = {lo, hi};
}

std::vector<RepLabel> LabelGrid::labels(GroupKind group) const {
  std::vector<RepLabel> out;
  auto range = [&](const std::string& key, const std::string& fallback) -> std::pair<int, int> {
    if (auto it = ranges_.find(key); it != ranges_.end()) return it->second;
    if (auto it = ranges_.find(fallback); it != ranges_.end()) return it->second;
    throw Error(ErrorKind::InvalidArgument, "grid has no range for " + key);
  };
  if (ranges_.empty()) return out;
  const auto [n_lo, n_hi] = range("n", "n");
  const auto [m_lo, m_hi] = range("m", "m");
  if (group == GroupKind::GL2) {
    for (int n = n_lo; n <= n_hi; ++n)
      for (int m = m_lo; m <= m_hi; ++m) out.push_back(Gl2Label{n, m});
  } else if (group == GroupKind::GL2xGL2) {
    const auto [n2_lo, n2_hi] = range("n2", "n");
    const auto [m2_lo, m2_hi] = range("m2", "m");
    for (int n = n_lo; n <= n_hi; ++n)
      for (int m = m_lo; m <= m_hi; ++m)
        for (int n2 = n2_lo; n2 <= n2_hi; ++n2)
          for (int m2 = m2_lo; m2 <= m2_hi; ++m2) out.push_back(Gl2PairLabel{{n, m}, {n2, m2}});
  } else {
    throw Error(ErrorKind::Unsupported, "label grids exist for GL2 and GL2 x GL2 only");
  }
  return out;
}

}  // namespace eqvb
