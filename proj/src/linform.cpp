#include "mhikita/linform.hpp"

#include <tuple>

#include "mhikita/errors.hpp"

namespace mh {

namespace {
void same_rank(const LinearForm& a, const LinearForm& b) {
  if (a.u.size() != b.u.size()) throw StructuralError("linear forms of different rank");
}
}  // namespace

bool LinearForm::is_zero() const {
  if (hbar) return false;
  for (auto c : u)
    if (c) return false;
  return true;
}

LinearForm LinearForm::operator+(const LinearForm& o) const {
  same_rank(*this, o);
  LinearForm r = *this;
  for (std::size_t i = 0; i < u.size(); ++i) r.u[i] += o.u[i];
  r.hbar += o.hbar;
  return r;
}

LinearForm LinearForm::operator-(const LinearForm& o) const { return *this + o * -1; }

LinearForm LinearForm::operator*(std::int64_t k) const {
  LinearForm r = *this;
  for (auto& c : r.u) c *= k;
  r.hbar *= k;
  return r;
}

bool LinearForm::operator<(const LinearForm& o) const {
  return std::tie(u, hbar) < std::tie(o.u, o.hbar);
}

std::int64_t LinearForm::pair(const std::vector<std::int64_t>& a) const {
  if (a.size() != u.size()) throw StructuralError("pairing with a vector of wrong length");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * a[i];
  return s;
}

CoeffPoly LinearForm::to_poly(const RingPtr& R, const std::vector<int>& uvar) const {
  if (uvar.size() != u.size()) throw StructuralError("to_poly: variable map has wrong length");
  CoeffPoly r = CoeffPoly::var(R, 0).scaled(mod_reduce(hbar, R->p));
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i]) r += CoeffPoly::var(R, uvar[i]).scaled(mod_reduce(u[i], R->p));
  return r;
}

std::string LinearForm::str(const std::vector<std::string>& names) const {
  std::string out;
  auto put = [&](std::int64_t c, const std::string& name) {
    if (!c) return;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::int64_t a = c < 0 ? -c : c;
    if (a != 1) out += std::to_string(a) + "*";
    out += name;
  };
  for (std::size_t i = 0; i < u.size(); ++i)
    put(u[i], i < names.size() ? names[i] : "u" + std::to_string(i + 1));
  put(hbar, "hbar");
  return out.empty() ? "0" : out;
}

}  // namespace mh
