#include "twg/perm.hpp"

#include <sstream>
#include <stdexcept>

namespace twg {

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
  const int n = degree();
  if (n > kMaxDegree) throw std::invalid_argument("Perm: degree exceeds 10^6");
  std::vector<char> seen(static_cast<size_t>(n), 0);
  for (int x : img_) {
    if (x < 0 || x >= n) throw std::invalid_argument("Perm: image out of range");
    if (seen[static_cast<size_t>(x)]) throw std::invalid_argument("Perm: not a bijection");
    seen[static_cast<size_t>(x)] = 1;
  }
}

Perm Perm::identity(int degree) {
  std::vector<int> img(static_cast<size_t>(degree));
  for (int i = 0; i < degree; ++i) img[static_cast<size_t>(i)] = i;
  return Perm(std::move(img));
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[static_cast<size_t>(i)] != i) return false;
  return true;
}

Perm compose(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("compose: degree mismatch");
  std::vector<int> img(static_cast<size_t>(a.degree()));
  for (int x = 0; x < a.degree(); ++x) img[static_cast<size_t>(x)] = b(a(x));
  return Perm(std::move(img));
}

Perm inverse(const Perm& a) {
  std::vector<int> img(static_cast<size_t>(a.degree()));
  for (int x = 0; x < a.degree(); ++x) img[static_cast<size_t>(a(x))] = x;
  return Perm(std::move(img));
}

Perm conjugate(const Perm& t, const Perm& s) {
  return compose(compose(inverse(s), t), s);
}

int element_order(const Perm& a) {
  Perm x = a;
  int e = 1;
  while (!x.is_identity()) {
    x = compose(x, a);
    ++e;
    if (e > 1'000'000) throw std::runtime_error("element_order: runaway");
  }
  return e;
}

std::string to_cycle_string(const Perm& a) {
  std::ostringstream os;
  std::vector<char> seen(static_cast<size_t>(a.degree()), 0);
  bool any = false;
  for (int i = 0; i < a.degree(); ++i) {
    if (seen[static_cast<size_t>(i)] || a(i) == i) continue;
    any = true;
    os << '(' << i;
    seen[static_cast<size_t>(i)] = 1;
    for (int j = a(i); j != i; j = a(j)) {
      os << ' ' << j;
      seen[static_cast<size_t>(j)] = 1;
    }
    os << ')';
  }
  if (!any) os << "()";
  return os.str();
}

}  // namespace twg
