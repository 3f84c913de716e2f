#include "agelab/walsh.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "agelab/summation.hpp"

namespace agelab {

namespace {

std::vector<int> normalized(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  if (std::adjacent_find(v.begin(), v.end()) != v.end())
    throw DomainError("WalshIndexSet: indices must be pairwise distinct");
  return v;
}

}  // namespace

WalshIndexSet::WalshIndexSet(std::initializer_list<int> indices)
    : indices_(normalized(std::vector<int>(indices))) {}

WalshIndexSet::WalshIndexSet(std::vector<int> indices)
    : indices_(normalized(std::move(indices))) {}

int WalshIndexSet::max() const {
  if (indices_.empty()) throw DomainError("WalshIndexSet: max of the empty set");
  return indices_.back();
}

int WalshIndexSet::min() const {
  if (indices_.empty()) throw DomainError("WalshIndexSet: min of the empty set");
  return indices_.front();
}

WalshIndexSet WalshIndexSet::shifted(int n) const {
  WalshIndexSet out;
  out.indices_.reserve(indices_.size());
  for (int i : indices_) out.indices_.push_back(i + n);
  return out;
}

WalshExpansion WalshExpansion::term(WalshIndexSet F, Complex a) {
  WalshExpansion rho;
  rho.set(F, a);
  return rho;
}

void WalshExpansion::set(const WalshIndexSet& F, Complex a) {
  if (a == Complex(0.0, 0.0)) {
    terms_.erase(F);
  } else {
    terms_[F] = a;
  }
}

Complex WalshExpansion::coeff(const WalshIndexSet& F) const {
  const auto it = terms_.find(F);
  return it == terms_.end() ? Complex(0.0, 0.0) : it->second;
}

bool WalshExpansion::mean_zero() const { return terms_.find(WalshIndexSet{}) == terms_.end(); }

WalshExpansion& WalshExpansion::operator+=(const WalshExpansion& other) {
  for (const auto& [F, a] : other.terms_) set(F, coeff(F) + a);
  return *this;
}

WalshExpansion& WalshExpansion::operator-=(const WalshExpansion& other) {
  for (const auto& [F, a] : other.terms_) set(F, coeff(F) - a);
  return *this;
}

WalshExpansion& WalshExpansion::operator*=(Complex scale) {
  if (scale == Complex(0.0, 0.0)) {
    terms_.clear();
    return *this;
  }
  for (auto& [F, a] : terms_) a *= scale;
  return *this;
}

double WalshExpansion::norm_squared() const {
  CompensatedSum sum;
  for (const auto& [F, a] : terms_)
    sum.add(a.real() * a.real() + a.imag() * a.imag());
  return sum.value();
}

double WalshExpansion::norm() const { return std::sqrt(norm_squared()); }

int rademacher_eval(int n, const BitTape& tape) {
  return tape.bit_at_time(n) == 0 ? 1 : -1;
}

int walsh_eval(const WalshIndexSet& F, const BitTape& tape) {
  int sign = 1;
  for (int n : F.indices()) sign *= rademacher_eval(n, tape);
  return sign;
}

Complex evaluate(const WalshExpansion& rho, const BitTape& tape) {
  Complex value(0.0, 0.0);
  for (const auto& [F, a] : rho.terms())
    value += a * double(walsh_eval(F, tape));
  return value;
}

WalshExpansion koopman_apply(const WalshExpansion& rho, int n) {
  WalshExpansion out;
  for (const auto& [F, a] : rho.terms()) out.set(F.shifted(n), a);
  return out;
}

WalshExpansion age_apply(const WalshExpansion& rho) {
  if (!rho.mean_zero())
    throw AgeUndefinedForEquilibrium("age_apply: expansion has a constant term");
  WalshExpansion out;
  for (const auto& [F, a] : rho.terms()) out.set(F, a * double(F.max()));
  return out;
}

double age_commutation_residual(const WalshExpansion& rho, int n) {
  if (!rho.mean_zero())
    throw AgeUndefinedForEquilibrium("age_commutation_residual: expansion has a constant term");
  // Each alpha_F is a joint eigenvector of U^-n A U^n and A, so the operator
  // acts termwise with the integer eigenvalue defect max(F+n) - max F - n.
  // The defect is computed in integer arithmetic; nonzero coefficients scale
  // it afterwards, which keeps the cancellation exact.
  CompensatedSum sum;
  for (const auto& [F, a] : rho.terms()) {
    const int defect = F.shifted(n).max() - F.max() - n;
    const double magnitude = std::abs(a) * double(defect);
    sum.add(magnitude * magnitude);
  }
  return std::sqrt(sum.value());
}

Complex inner_product(const WalshExpansion& a, const WalshExpansion& b) {
  Complex value(0.0, 0.0);
  for (const auto& [F, af] : a.terms()) {
    const Complex bf = b.coeff(F);
    if (bf != Complex(0.0, 0.0)) value += std::conj(af) * bf;
  }
  return value;
}

std::string to_text(const WalshExpansion& rho) {
  std::string out;
  char buf[64];
  for (const auto& [F, a] : rho.terms()) {
    out += "F={";
    bool first = true;
    for (int n : F.indices()) {
      if (!first) out += ',';
      out += std::to_string(n);
      first = false;
    }
    out += "} ";
    std::snprintf(buf, sizeof buf, "%.17g %.17g", a.real(), a.imag());
    out += buf;
    out += '\n';
  }
  return out;
}

WalshExpansion expansion_from_text(const std::string& text) {
  WalshExpansion rho;
  std::istringstream stream(text);
  std::string line;
  int line_no = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    const auto open = line.find("F={");
    const auto close = line.find('}', open == std::string::npos ? 0 : open);
    if (open == std::string::npos || close == std::string::npos)
      throw IoError("expansion_from_text: malformed term on line " + std::to_string(line_no));
    std::vector<int> indices;
    std::string body = line.substr(open + 3, close - open - 3);
    std::istringstream items(body);
    std::string item;
    while (std::getline(items, item, ',')) {
      if (item.empty()) continue;
      try {
        indices.push_back(std::stoi(item));
      } catch (const std::exception&) {
        throw IoError("expansion_from_text: bad index '" + item + "' on line " +
                      std::to_string(line_no));
      }
    }
    double re = 0.0, im = 0.0;
    std::istringstream tail(line.substr(close + 1));
    if (!(tail >> re >> im))
      throw IoError("expansion_from_text: malformed coefficient on line " +
                    std::to_string(line_no));
    const WalshIndexSet F(indices);
    rho.set(F, rho.coeff(F) + Complex(re, im));
  }
  return rho;
}

}  // namespace agelab
