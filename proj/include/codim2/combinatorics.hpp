#pragma once

#include <optional>
#include <string>
#include <vector>

#include "codim2/scalar.hpp"

namespace codim2 {

// Multiplicity vector a = (a_1, ..., a_q) with 1 <= a_j <= d-1, sum a_j = 2d-2, q >= 2.
class ContentVector
{
public:
  explicit ContentVector(std::vector<int> entries);

  // Parses "1,1,2,2".
  static ContentVector parse(std::string const &text);

  std::vector<int> const &entries() const { return entries_; }
  int operator[](std::size_t j) const { return entries_[j]; }
  std::size_t size() const { return entries_.size(); }
  int d() const { return d_; }
  int sum() const { return 2 * d_ - 2; }

  std::string to_string() const;

  friend bool operator==(ContentVector const &, ContentVector const &) = default;

private:
  std::vector<int> entries_;
  int d_ = 0;
};

// Filling of the 2 x (d-1) diagram; entries are 1-based block labels.
struct Tableau
{
  std::vector<int> row1;
  std::vector<int> row2;

  friend bool operator==(Tableau const &, Tableau const &) = default;
  friend auto operator<=>(Tableau const &, Tableau const &) = default;

  // "[1 2 | 3 4]"
  std::string to_string() const;
};

// Empty string when the tableau is a semistandard filling with this content,
// otherwise a description of the first violated condition.
std::string tableau_violation(Tableau const &t, ContentVector const &content);

// Every SSYT of shape 2 x (d-1) with the given content, lexicographic in (row1, row2).
std::vector<Tableau> enumerate_ssyt(ContentVector const &content);

// Number of such tableaux, computed by a row-occupancy recurrence without materializing them.
BigInt kostka(ContentVector const &content);

// Closed-form count where one is known: the Catalan case (1,...,1), the case
// (a,1,...,1) in any order, and (d-1, d-1). Empty otherwise.
std::optional<BigInt> kostka_closed_form(ContentVector const &content);

BigInt binomial(int n, int k);

// All valid contents for a given d (ordered compositions of 2d-2 into parts in [1, d-1], q >= 2).
std::vector<ContentVector> all_contents(int d);

} // namespace codim2
