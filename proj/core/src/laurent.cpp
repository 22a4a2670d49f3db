#include "trank/laurent.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace trank {

LaurentPoly LaurentPoly::term(long long exp, BigInt coeff) {
  LaurentPoly p;
  if (coeff != 0) p.coeffs_.emplace(exp, std::move(coeff));
  return p;
}

long long LaurentPoly::min_exp() const {
  if (coeffs_.empty()) throw std::logic_error("min_exp of the zero polynomial");
  return coeffs_.begin()->first;
}

long long LaurentPoly::max_exp() const {
  if (coeffs_.empty()) throw std::logic_error("max_exp of the zero polynomial");
  return coeffs_.rbegin()->first;
}

long long LaurentPoly::degree_span() const {
  return coeffs_.empty() ? 0 : max_exp() - min_exp();
}

void LaurentPoly::add_term(long long exp, const BigInt& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = coeffs_.emplace(exp, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) coeffs_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.coeffs_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.coeffs_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.coeffs_) {
    for (const auto& [eb, cb] : b.coeffs_) out.add_term(ea + eb, ca * cb);
  }
  return out;
}

LaurentPoly operator-(const LaurentPoly& a) {
  LaurentPoly out;
  for (const auto& [e, c] : a.coeffs_) out.coeffs_.emplace(e, -c);
  return out;
}

LaurentPoly LaurentPoly::scaled(const BigInt& c, long long shift) const {
  LaurentPoly out;
  if (c == 0) return out;
  for (const auto& [e, v] : coeffs_) out.coeffs_.emplace(e + shift, v * c);
  return out;
}

LaurentPoly LaurentPoly::reciprocal_variable() const {
  LaurentPoly out;
  for (const auto& [e, v] : coeffs_) out.coeffs_.emplace(-e, v);
  return out;
}

std::string LaurentPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : coeffs_) {
    const bool negative = c < 0;
    BigInt mag = negative ? BigInt(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const bool unit_coeff = mag == 1 && e != 0;
    if (!unit_coeff) out += mag.str();
    if (e != 0) {
      if (!unit_coeff) out += "*";
      out += "t";
      if (e != 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

namespace {

// Divide out the integer content and the common power of t from a row.
void strip_row_content(LaurentMatrix& m, std::size_t row) {
  BigInt g = 0;
  long long shift = 0;
  bool any = false;
  for (std::size_t j = 0; j < m.cols; ++j) {
    const LaurentPoly& p = m.at(row, j);
    if (p.is_zero()) continue;
    if (!any) {
      shift = p.min_exp();
      any = true;
    } else {
      shift = std::min(shift, p.min_exp());
    }
    for (const auto& [e, c] : p.terms()) g = gcd(g, c);
  }
  if (!any || (g == 1 && shift == 0)) return;
  for (std::size_t j = 0; j < m.cols; ++j) {
    const LaurentPoly& p = m.at(row, j);
    if (p.is_zero()) continue;
    LaurentPoly q;
    for (const auto& [e, c] : p.terms()) q.add_term(e - shift, c / g);
    m.at(row, j) = std::move(q);
  }
}

}  // namespace

std::size_t laurent_rank(const LaurentMatrix& input, PivotScan scan) {
  LaurentMatrix m = input;
  std::vector<bool> row_used(m.rows, false), col_used(m.cols, false);
  for (std::size_t i = 0; i < m.rows; ++i) strip_row_content(m, i);

  std::size_t rank = 0;
  for (;;) {
    bool found = false;
    std::size_t pr = 0, pc = 0;
    long long best = 0;
    auto consider = [&](std::size_t i, std::size_t j) {
      if (row_used[i] || col_used[j] || m.at(i, j).is_zero()) return;
      const long long span = m.at(i, j).degree_span();
      if (!found || span < best) {
        found = true;
        best = span;
        pr = i;
        pc = j;
      }
    };
    if (scan == PivotScan::RowMajor) {
      for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) consider(i, j);
    } else {
      for (std::size_t j = 0; j < m.cols; ++j)
        for (std::size_t i = 0; i < m.rows; ++i) consider(i, j);
    }
    if (!found) break;

    const LaurentPoly pivot = m.at(pr, pc);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == pr || row_used[i] || m.at(i, pc).is_zero()) continue;
      const LaurentPoly factor = m.at(i, pc);
      for (std::size_t j = 0; j < m.cols; ++j) {
        if (col_used[j]) continue;
        m.at(i, j) = pivot * m.at(i, j) - factor * m.at(pr, j);
      }
      strip_row_content(m, i);
    }
    row_used[pr] = true;
    col_used[pc] = true;
    ++rank;
  }
  return rank;
}

}  // namespace trank
