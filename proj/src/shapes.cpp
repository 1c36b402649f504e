#include "fakedeg/shapes.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <stdexcept>

namespace fakedeg {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

int Partition::row_length(int row) const {
  return row >= 1 && row <= length() ? parts_[static_cast<std::size_t>(row - 1)] : 0;
}

bool Partition::contains(Cell c) const { return c.row >= 1 && c.col >= 1 && c.col <= row_length(c.row); }

Partition Partition::conjugate() const {
  std::vector<int> out(parts_.empty() ? 0 : static_cast<std::size_t>(parts_.front()), 0);
  for (int p : parts_)
    for (int c = 0; c < p; ++c) ++out[static_cast<std::size_t>(c)];
  return Partition(std::move(out));
}

std::vector<Cell> Partition::cells() const {
  std::vector<Cell> out;
  out.reserve(static_cast<std::size_t>(size_));
  for (int r = 1; r <= length(); ++r)
    for (int c = 1; c <= row_length(r); ++c) out.push_back({r, c});
  return out;
}

std::vector<Cell> Partition::corners() const {
  std::vector<Cell> out;
  for (int r = 1; r <= length(); ++r)
    if (row_length(r + 1) < row_length(r)) out.push_back({r, row_length(r)});
  return out;
}

Multipartition::Multipartition(std::vector<Partition> components) : components_(std::move(components)) {
  if (components_.empty()) throw std::invalid_argument("multipartition needs at least one component");
  for (const auto& p : components_) total_size_ += p.size();
}

std::vector<int> Multipartition::sizes() const {
  std::vector<int> out;
  for (const auto& p : components_) out.push_back(p.size());
  return out;
}

std::vector<int> hooks(const Partition& alpha) {
  const Partition conj = alpha.conjugate();
  std::vector<int> out;
  for (Cell c : alpha.cells()) {
    const int arm = alpha.row_length(c.row) - c.col;
    const int leg = conj.row_length(c.col) - c.row;
    out.push_back(arm + leg + 1);
  }
  return out;
}

long b_statistic(const Partition& alpha) {
  long b = 0;
  for (int i = 0; i < alpha.length(); ++i) b += static_cast<long>(i) * alpha.parts()[static_cast<std::size_t>(i)];
  return b;
}

long b_multi(const Multipartition& lambda) {
  long b = 0;
  for (int i = 0; i < lambda.d(); ++i) b += static_cast<long>(i) * lambda[static_cast<std::size_t>(i)].size();
  return b;
}

namespace {

Partition lusztig_map(const Multipartition& pair, bool odd) {
  if (pair.d() != 2) throw std::invalid_argument("Lusztig map needs a partition pair");
  const Partition& first = pair[0];
  const Partition& second = pair[1];
  const int m = std::max(first.length() - 1, second.length());
  std::vector<int> merged;
  for (int i = 1; i <= m + 1; ++i) {
    const int star = first.row_length(i) + m + 1 - i;
    merged.push_back(odd ? 2 * star + 1 : 2 * star);
  }
  for (int j = 1; j <= m; ++j) {
    const int star = second.row_length(j) + m - j;
    merged.push_back(odd ? 2 * star : 2 * star + 1);
  }
  std::sort(merged.rbegin(), merged.rend());
  const int r = static_cast<int>(merged.size());
  std::vector<int> parts;
  for (int i = 1; i <= r; ++i) parts.push_back(merged[static_cast<std::size_t>(i - 1)] - r + i);
  return Partition(std::move(parts));
}

// Rim dominoes whose removal leaves a partition, as the resulting shapes.
std::vector<Partition> domino_removals(const Partition& alpha) {
  std::vector<Partition> out;
  const auto& p = alpha.parts();
  const int len = alpha.length();
  for (int i = 1; i <= len; ++i) {
    const int li = alpha.row_length(i);
    if (li >= 2 && li - 2 >= alpha.row_length(i + 1)) {
      auto q = p;
      q[static_cast<std::size_t>(i - 1)] -= 2;
      out.emplace_back(std::move(q));
    }
    if (i < len && alpha.row_length(i + 1) == li && alpha.row_length(i + 2) < li) {
      auto q = p;
      q[static_cast<std::size_t>(i - 1)] -= 1;
      q[static_cast<std::size_t>(i)] -= 1;
      out.emplace_back(std::move(q));
    }
  }
  return out;
}

}  // namespace

Partition lusztig_rho1(const Multipartition& pair) { return lusztig_map(pair, false); }
Partition lusztig_rho2(const Multipartition& pair) { return lusztig_map(pair, true); }

bool supports_domino(const Partition& alpha) {
  std::map<Partition, bool> memo;
  const int target = alpha.size() % 2;
  std::function<bool(const Partition&)> reach = [&](const Partition& shape) -> bool {
    if (shape.size() == target) return true;
    if (auto it = memo.find(shape); it != memo.end()) return it->second;
    bool ok = false;
    for (const auto& smaller : domino_removals(shape)) {
      if (smaller.size() < target) continue;
      if (reach(smaller)) {
        ok = true;
        break;
      }
    }
    memo.emplace(shape, ok);
    return ok;
  };
  return reach(alpha);
}

Partition two_core(const Partition& alpha) {
  const int r = alpha.length();
  int beads[2] = {0, 0};
  for (int i = 1; i <= r; ++i) ++beads[(alpha.row_length(i) + r - i) % 2];
  std::vector<int> beta;
  for (int t = 0; t < 2; ++t)
    for (int k = 0; k < beads[t]; ++k) beta.push_back(t + 2 * k);
  std::sort(beta.rbegin(), beta.rend());
  std::vector<int> parts;
  for (int i = 1; i <= r; ++i) parts.push_back(beta[static_cast<std::size_t>(i - 1)] - (r - i));
  return Partition(std::move(parts));
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: n must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
      current.push_back(k);
      rec(remaining - k, k);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<Multipartition> multipartitions_of(int n, int d) {
  if (n < 0 || d < 1) throw std::invalid_argument("multipartitions_of: need n >= 0 and d >= 1");
  std::vector<std::vector<Partition>> by_size;
  for (int k = 0; k <= n; ++k) by_size.push_back(partitions_of(k));

  std::vector<Multipartition> out;
  std::vector<Partition> current;
  std::function<void(int, int)> rec = [&](int component, int remaining) {
    if (component == d - 1) {
      for (const auto& p : by_size[static_cast<std::size_t>(remaining)]) {
        current.push_back(p);
        out.emplace_back(current);
        current.pop_back();
      }
      return;
    }
    for (int k = remaining; k >= 0; --k)
      for (const auto& p : by_size[static_cast<std::size_t>(k)]) {
        current.push_back(p);
        rec(component + 1, remaining - k);
        current.pop_back();
      }
  };
  rec(0, n);
  return out;
}

std::string format_partition(const Partition& alpha) {
  std::string out;
  for (std::size_t i = 0; i < alpha.parts().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(alpha.parts()[i]);
  }
  return out;
}

std::string format_partition_paren(const Partition& alpha) { return "(" + format_partition(alpha) + ")"; }

std::string format_multipartition(const Multipartition& lambda) {
  std::string out;
  for (int i = 0; i < lambda.d(); ++i) {
    if (i) out += '|';
    out += format_partition(lambda[static_cast<std::size_t>(i)]);
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Partition parse_partition(std::string_view text) {
  text = trim(text);
  std::vector<int> parts;
  if (text.empty()) return Partition();
  while (true) {
    const auto comma = text.find(',');
    const std::string_view token = trim(text.substr(0, comma));
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size() || value <= 0)
      throw std::invalid_argument("malformed partition '" + std::string(text) + "': parts must be positive integers");
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (!std::is_sorted(parts.rbegin(), parts.rend()))
    throw std::invalid_argument("malformed partition: parts must be weakly decreasing");
  return Partition(std::move(parts));
}

Multipartition parse_multipartition(std::string_view text) {
  std::vector<Partition> comps;
  while (true) {
    const auto bar = text.find('|');
    comps.push_back(parse_partition(text.substr(0, bar)));
    if (bar == std::string_view::npos) break;
    text.remove_prefix(bar + 1);
  }
  return Multipartition(std::move(comps));
}

Multipartition parse_pair(std::string_view text) {
  Multipartition m = parse_multipartition(text);
  if (m.d() != 2) throw std::invalid_argument("expected a partition pair \"p1|p2\"");
  return m;
}

}  // namespace fakedeg
