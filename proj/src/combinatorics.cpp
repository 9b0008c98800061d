#include "codim2/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "codim2/errors.hpp"

namespace codim2 {

ContentVector::ContentVector(std::vector<int> entries)
  : entries_(std::move(entries))
{
  if (entries_.size() < 2) {
    throw ConstraintViolation("content must have q >= 2 entries, got " + std::to_string(entries_.size()));
  }
  for (std::size_t j = 0; j < entries_.size(); ++j) {
    if (entries_[j] < 1) {
      throw ConstraintViolation("content entry a_" + std::to_string(j + 1) + " = " +
                                std::to_string(entries_[j]) + " violates 1 <= a_j");
    }
  }
  int const total = std::accumulate(entries_.begin(), entries_.end(), 0);
  if (total % 2 != 0) {
    throw ConstraintViolation("content sum " + std::to_string(total) + " is odd; sum a_j must equal 2d-2");
  }
  d_ = total / 2 + 1;
  for (std::size_t j = 0; j < entries_.size(); ++j) {
    if (entries_[j] > d_ - 1) {
      throw ConstraintViolation("content entry a_" + std::to_string(j + 1) + " = " + std::to_string(entries_[j]) +
                                " violates a_j <= d-1 = " + std::to_string(d_ - 1));
    }
  }
}

ContentVector ContentVector::parse(std::string const &text)
{
  std::vector<int> entries;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto const first = item.find_first_not_of(" \t");
    item = first == std::string::npos ? std::string() : item.substr(first, item.find_last_not_of(" \t") - first + 1);
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (std::exception const &) {
      throw ConstraintViolation("cannot parse content entry '" + item + "'");
    }
    if (used != item.size()) {
      throw ConstraintViolation("cannot parse content entry '" + item + "'");
    }
    entries.push_back(value);
  }
  return ContentVector(std::move(entries));
}

std::string ContentVector::to_string() const
{
  std::string out;
  for (std::size_t j = 0; j < entries_.size(); ++j) {
    if (j) out += ',';
    out += std::to_string(entries_[j]);
  }
  return out;
}

std::string Tableau::to_string() const
{
  std::string out = "[";
  for (std::size_t i = 0; i < row1.size(); ++i) {
    out += (i ? " " : "") + std::to_string(row1[i]);
  }
  out += " |";
  for (int v : row2) {
    out += " " + std::to_string(v);
  }
  return out + "]";
}

std::string tableau_violation(Tableau const &t, ContentVector const &content)
{
  std::size_t const n = static_cast<std::size_t>(content.d() - 1);
  if (t.row1.size() != n || t.row2.size() != n) {
    return "rows must have length d-1 = " + std::to_string(n);
  }
  std::vector<int> count(content.size() + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0 && (t.row1[i] < t.row1[i - 1] || t.row2[i] < t.row2[i - 1])) {
      return "row decreases at column " + std::to_string(i + 1);
    }
    if (t.row1[i] >= t.row2[i]) {
      return "column " + std::to_string(i + 1) + " is not strictly increasing";
    }
    for (int v : {t.row1[i], t.row2[i]}) {
      if (v < 1 || v > static_cast<int>(content.size())) {
        return "entry " + std::to_string(v) + " out of range";
      }
      ++count[v];
    }
  }
  for (std::size_t k = 1; k <= content.size(); ++k) {
    if (count[k] != content[k - 1]) {
      return "entry " + std::to_string(k) + " appears " + std::to_string(count[k]) + " times, expected " +
             std::to_string(content[k - 1]);
    }
  }
  return {};
}

namespace {

struct SsytBuilder
{
  std::vector<int> const &content;
  std::size_t columns;
  std::vector<int> remaining;
  Tableau current;
  std::vector<Tableau> out;

  // Values k whose copies are all used before column c must not be needed later;
  // a value still having copies left needs room: at most 2 per remaining column.
  bool feasible(std::size_t col) const
  {
    int left = 0;
    for (std::size_t k = 1; k < remaining.size(); ++k) {
      if (remaining[k] > static_cast<int>(columns - col)) return false;
      left += remaining[k];
    }
    return left == 2 * static_cast<int>(columns - col);
  }

  void extend(std::size_t col)
  {
    if (col == columns) {
      out.push_back(current);
      return;
    }
    int const q = static_cast<int>(content.size());
    int const top_min = col ? current.row1[col - 1] : 1;
    int const bottom_min = col ? current.row2[col - 1] : 1;
    for (int top = top_min; top <= q; ++top) {
      if (remaining[top] == 0) continue;
      --remaining[top];
      for (int bottom = std::max(top + 1, bottom_min); bottom <= q; ++bottom) {
        if (remaining[bottom] == 0) continue;
        --remaining[bottom];
        if (feasible(col + 1)) {
          current.row1.push_back(top);
          current.row2.push_back(bottom);
          extend(col + 1);
          current.row1.pop_back();
          current.row2.pop_back();
        }
        ++remaining[bottom];
      }
      ++remaining[top];
    }
  }
};

} // namespace

std::vector<Tableau> enumerate_ssyt(ContentVector const &content)
{
  SsytBuilder builder{content.entries(), static_cast<std::size_t>(content.d() - 1), {}, {}, {}};
  builder.remaining.assign(content.size() + 1, 0);
  for (std::size_t k = 0; k < content.size(); ++k) {
    builder.remaining[k + 1] = content[k];
  }
  builder.extend(0);
  std::sort(builder.out.begin(), builder.out.end());
  return std::move(builder.out);
}

BigInt kostka(ContentVector const &content)
{
  // ways[r1] = number of partial fillings using labels 1..k with r1 cells in row 1.
  // Label k may add x cells to row 1 and a_k - x cells to row 2; the new row-2 cells
  // sit under row-1 cells with strictly smaller labels, so r2' <= r1 (before the update).
  int const n = content.d() - 1;
  std::vector<BigInt> ways(n + 1, 0);
  ways[0] = 1;
  int placed = 0;
  for (int a : content.entries()) {
    std::vector<BigInt> next(n + 1, 0);
    for (int r1 = 0; r1 <= n; ++r1) {
      if (ways[r1] == 0) continue;
      int const r2 = placed - r1;
      for (int x = 0; x <= a; ++x) {
        int const r1n = r1 + x;
        int const r2n = r2 + (a - x);
        if (r1n > n || r2n > r1) continue;
        next[r1n] += ways[r1];
      }
    }
    placed += a;
    ways = std::move(next);
  }
  return ways[n];
}

BigInt binomial(int n, int k)
{
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
  }
  return r;
}

std::optional<BigInt> kostka_closed_form(ContentVector const &content)
{
  int const d = content.d();
  std::vector<int> sorted = content.entries();
  std::sort(sorted.begin(), sorted.end(), std::greater<>());

  if (sorted.size() == 2 && sorted[0] == d - 1 && sorted[1] == d - 1) {
    return BigInt(1);
  }
  // (a_1, 1, ..., 1): the Catalan case is a_1 = 1.
  if (std::all_of(sorted.begin() + 1, sorted.end(), [](int a) { return a == 1; })) {
    int const a1 = sorted[0];
    BigInt const num = BigInt(a1 + 1) * binomial(2 * d - 2 - a1, d - 1);
    return BigInt(num / d);
  }
  return std::nullopt;
}

namespace {

void compositions(int remaining, int max_part, std::vector<int> &prefix, std::vector<std::vector<int>> &out)
{
  if (remaining == 0) {
    if (prefix.size() >= 2) out.push_back(prefix);
    return;
  }
  for (int a = 1; a <= std::min(remaining, max_part); ++a) {
    prefix.push_back(a);
    compositions(remaining - a, max_part, prefix, out);
    prefix.pop_back();
  }
}

} // namespace

std::vector<ContentVector> all_contents(int d)
{
  std::vector<std::vector<int>> raw;
  std::vector<int> prefix;
  compositions(2 * d - 2, d - 1, prefix, raw);
  std::vector<ContentVector> out;
  out.reserve(raw.size());
  for (auto &entries : raw) {
    out.emplace_back(std::move(entries));
  }
  return out;
}

} // namespace codim2
