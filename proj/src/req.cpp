#include "mhikita/req.hpp"

#include <sstream>

#include "mhikita/errors.hpp"
#include "mhikita/weyl.hpp"

namespace mh {

REqCtx req_context(const TraceData& td) {
  auto C = std::make_shared<REqContext>();
  C->nz = static_cast<int>(td.roots.coords.size());
  if (td.sl2) {
    C->R = td.full;
    C->pairing.assign(3, std::vector<std::int64_t>(C->nz, 0));
    for (int l = 0; l < C->nz; ++l) C->pairing[2][l] = td.roots.coords[l][0];
  } else {
    C->R = euler_ring(make_ring(td.p, {"hbar"}), td.gauge.n);
    C->pairing.assign(td.gauge.n + 1, std::vector<std::int64_t>(C->nz, 0));
    for (int i = 0; i < td.gauge.n; ++i)
      for (int l = 0; l < C->nz; ++l) C->pairing[i + 1][l] = td.roots.coords[l][i];
  }
  return C;
}

REqElement::REqElement(REqCtx C) : C_(std::move(C)) {}

REqElement REqElement::constant(REqCtx C, std::int64_t c) {
  REqElement r(C);
  r.add_term(ZExp{}, CoeffPoly::constant(C->R, c));
  return r;
}

REqElement REqElement::z(REqCtx C, int l) {
  if (l < 0 || l >= C->nz) throw StructuralError("z index out of range");
  REqElement r(C);
  r.add_term(zunit(l), CoeffPoly::constant(C->R, 1));
  return r;
}

REqElement REqElement::var(REqCtx C, int v) {
  REqElement r(C);
  r.add_term(ZExp{}, CoeffPoly::var(C->R, v));
  return r;
}

REqElement REqElement::term(REqCtx C, const ZExp& e, const CoeffPoly& f) {
  REqElement r(C);
  r.add_term(e, f);
  return r;
}

void REqElement::add_term(const ZExp& e, const CoeffPoly& f) {
  require_same_ring(C_->R, f.ring(), "REqElement");
  if (f.is_zero()) return;
  auto it = t_.find(e);
  if (it == t_.end()) {
    t_.emplace(e, f);
    return;
  }
  it->second += f;
  if (it->second.is_zero()) t_.erase(it);
}

REqElement REqElement::operator+(const REqElement& o) const {
  if (C_ != o.C_) throw StructuralError("REqElement: contexts differ");
  REqElement r = *this;
  for (auto& [e, f] : o.t_) r.add_term(e, f);
  return r;
}

REqElement REqElement::operator-(const REqElement& o) const {
  if (C_ != o.C_) throw StructuralError("REqElement: contexts differ");
  REqElement r = *this;
  for (auto& [e, f] : o.t_) r.add_term(e, -f);
  return r;
}

REqElement REqElement::operator*(const REqElement& o) const {
  if (C_ != o.C_) throw StructuralError("REqElement: contexts differ");
  const auto& R = C_->R;
  auto hb = CoeffPoly::var(R, 0);
  REqElement r(C_);
  // (z^mu f)(z^nu g) = z^(mu+nu) f(a + hbar <nu, abar>) g
  for (auto& [nu, g] : o.t_) {
    std::vector<CoeffPoly> img;
    for (int v = 0; v < R->nvars(); ++v) {
      std::int64_t s = 0;
      for (int l = 0; l < C_->nz; ++l) s += nu[l] * C_->pairing[v][l];
      img.push_back(CoeffPoly::var(R, v) + hb.scaled(mod_reduce(s, R->p)));
    }
    for (auto& [mu, f] : t_) r.add_term(zadd(mu, nu), f.substitute(img) * g);
  }
  return r;
}

REqElement REqElement::scaled(std::uint32_t c) const {
  REqElement r(C_);
  for (auto& [e, f] : t_) r.add_term(e, f.scaled(c));
  return r;
}

REqElement REqElement::pow(unsigned k) const {
  REqElement r = constant(C_, 1);
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

bool REqElement::divide_hbar(unsigned k, REqElement* q) const {
  REqElement r(C_);
  for (auto& [e, f] : t_) {
    auto [quo, rem] = f.divide_var_power(0, k);
    if (!rem.is_zero()) return false;
    r.add_term(e, quo);
  }
  if (q) *q = r;
  return true;
}

int REqElement::degree() const {
  int d = -1;
  for (auto& [e, f] : t_) d = std::max(d, zdeg(e) + f.degree());
  return d;
}

std::string REqElement::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [e, f] : t_) {
    os << (first ? "" : " + ");
    first = false;
    if (zdeg(e)) os << zexp_str(e, C_->nz) << "*";
    os << "(" << f.str() << ")";
  }
  return os.str();
}

}  // namespace mh
