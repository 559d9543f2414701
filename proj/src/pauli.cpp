#include "core/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace stab {

static int nwords(int n) { return (n + 63) / 64; }

Pauli Pauli::identity(int n) {
  Pauli p;
  p.n = n;
  p.x.assign(nwords(n), 0);
  p.z.assign(nwords(n), 0);
  return p;
}

Pauli Pauli::single(int n, int q, char letter) {
  if (q < 0 || q >= n) throw std::invalid_argument("qubit index out of range");
  Pauli p = identity(n);
  switch (letter) {
    case 'I': break;
    case 'X': p.set_xbit(q, true); break;
    case 'Z': p.set_zbit(q, true); break;
    case 'Y':
      p.set_xbit(q, true);
      p.set_zbit(q, true);
      p.phase = 1;
      break;
    default: throw std::invalid_argument("bad Pauli letter");
  }
  return p;
}

void Pauli::set_xbit(int q, bool v) {
  uint64_t m = uint64_t(1) << (q & 63);
  if (v) x[q >> 6] |= m; else x[q >> 6] &= ~m;
}

void Pauli::set_zbit(int q, bool v) {
  uint64_t m = uint64_t(1) << (q & 63);
  if (v) z[q >> 6] |= m; else z[q >> 6] &= ~m;
}

char Pauli::letter(int q) const {
  bool xb = xbit(q), zb = zbit(q);
  if (xb && zb) return 'Y';
  if (xb) return 'X';
  if (zb) return 'Z';
  return 'I';
}

bool Pauli::is_identity_pattern() const {
  for (auto w : x) if (w) return false;
  for (auto w : z) if (w) return false;
  return true;
}

int Pauli::weight() const {
  int c = 0;
  for (size_t i = 0; i < x.size(); ++i) c += std::popcount(x[i] | z[i]);
  return c;
}

std::vector<int> Pauli::support() const {
  std::vector<int> out;
  for (int q = 0; q < n; ++q)
    if (xbit(q) || zbit(q)) out.push_back(q);
  return out;
}

int Pauli::xz_overlap() const {
  int c = 0;
  for (size_t i = 0; i < x.size(); ++i) c += std::popcount(x[i] & z[i]);
  return c;
}

Pauli Pauli::hermitian_rep() const {
  Pauli p = *this;
  p.phase = xz_overlap() % 2;
  return p;
}

Pauli Pauli::restrict(const std::vector<char>& keep) const {
  if ((int)keep.size() != n) throw std::invalid_argument("keep mask size mismatch");
  Pauli p = identity(n);
  for (int q = 0; q < n; ++q) {
    if (!keep[q]) continue;
    p.set_xbit(q, xbit(q));
    p.set_zbit(q, zbit(q));
  }
  return p.hermitian_rep();
}

Pauli multiply(const Pauli& a, const Pauli& b) {
  if (a.n != b.n) throw std::invalid_argument("Pauli dimension mismatch");
  Pauli p = Pauli::identity(a.n);
  int cross = 0;  // moving a's Z-part across b's X-part
  for (size_t i = 0; i < p.x.size(); ++i) {
    p.x[i] = a.x[i] ^ b.x[i];
    p.z[i] = a.z[i] ^ b.z[i];
    cross += std::popcount(a.z[i] & b.x[i]);
  }
  p.phase = (a.phase + b.phase + 2 * (cross & 1)) & 3;
  return p;
}

int commutes_bit(const Pauli& a, const Pauli& b) {
  if (a.n != b.n) throw std::invalid_argument("Pauli dimension mismatch");
  int c = 0;
  for (size_t i = 0; i < a.x.size(); ++i)
    c += std::popcount(a.x[i] & b.z[i]) + std::popcount(a.z[i] & b.x[i]);
  return c & 1;
}

std::string to_string(const Pauli& p) {
  int ny = 0;
  std::string body;
  body.reserve(p.n);
  for (int q = 0; q < p.n; ++q) {
    char c = p.letter(q);
    if (c == 'Y') ++ny;
    body.push_back(c);
  }
  int e = ((p.phase - ny) % 4 + 4) % 4;
  static const char* pre[4] = {"+", "+i", "-", "-i"};
  return pre[e] + body;
}

Pauli parse_pauli(const std::string& s) {
  size_t i = 0;
  int e = 0;
  int sign = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    sign = (s[i] == '-') ? 2 : 0;
    ++i;
  }
  if (i < s.size() && s[i] == 'i') {
    e = 1;
    ++i;
  }
  e = (e + sign) % 4;
  int n = (int)(s.size() - i);
  Pauli p = Pauli::identity(n);
  int ny = 0;
  for (int q = 0; q < n; ++q) {
    char c = s[i + q];
    switch (c) {
      case 'I': break;
      case 'X': p.set_xbit(q, true); break;
      case 'Z': p.set_zbit(q, true); break;
      case 'Y':
        p.set_xbit(q, true);
        p.set_zbit(q, true);
        ++ny;
        break;
      default: throw std::invalid_argument("bad Pauli string character");
    }
  }
  p.phase = (e + ny) % 4;
  return p;
}

// rows as 2n-bit vectors [x|z]
static std::vector<std::vector<uint64_t>> rows_of(const GeneratingSet& gens) {
  std::vector<std::vector<uint64_t>> rows;
  for (const auto& g : gens) {
    std::vector<uint64_t> r = g.x;
    r.insert(r.end(), g.z.begin(), g.z.end());
    rows.push_back(std::move(r));
  }
  return rows;
}

int group_rank(const GeneratingSet& gens) {
  auto rows = rows_of(gens);
  int rank = 0;
  size_t w = rows.empty() ? 0 : rows[0].size();
  for (size_t col = 0; col < w * 64; ++col) {
    size_t wi = col / 64;
    uint64_t m = uint64_t(1) << (col % 64);
    size_t piv = rank;
    while (piv < rows.size() && !(rows[piv][wi] & m)) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r != (size_t)rank && (rows[r][wi] & m))
        for (size_t j = 0; j < w; ++j) rows[r][j] ^= rows[rank][j];
    }
    ++rank;
    if ((size_t)rank == rows.size()) break;
  }
  return rank;
}

std::optional<std::vector<int>> pattern_in_span(const GeneratingSet& gens, const Pauli& p) {
  auto rows = rows_of(gens);
  size_t m = rows.size();
  std::vector<uint64_t> tgt = p.x;
  tgt.insert(tgt.end(), p.z.begin(), p.z.end());
  size_t w = tgt.size();
  std::vector<std::vector<uint8_t>> cmb(m, std::vector<uint8_t>(m, 0));
  for (size_t i = 0; i < m; ++i) cmb[i][i] = 1;
  std::vector<uint8_t> sol(m, 0);
  size_t rank = 0;
  for (size_t col = 0; col < w * 64 && rank < m; ++col) {
    size_t wi = col / 64;
    uint64_t mask = uint64_t(1) << (col % 64);
    size_t piv = rank;
    while (piv < m && !(rows[piv][wi] & mask)) ++piv;
    if (piv == m) continue;
    std::swap(rows[rank], rows[piv]);
    std::swap(cmb[rank], cmb[piv]);
    for (size_t r = 0; r < m; ++r) {
      if (r != rank && (rows[r][wi] & mask)) {
        for (size_t j = 0; j < w; ++j) rows[r][j] ^= rows[rank][j];
        for (size_t j = 0; j < m; ++j) cmb[r][j] ^= cmb[rank][j];
      }
    }
    if (tgt[wi] & mask) {
      for (size_t j = 0; j < w; ++j) tgt[j] ^= rows[rank][j];
      for (size_t j = 0; j < m; ++j) sol[j] ^= cmb[rank][j];
    }
    ++rank;
  }
  for (auto wbits : tgt)
    if (wbits) return std::nullopt;
  std::vector<int> out;
  for (size_t j = 0; j < m; ++j)
    if (sol[j]) out.push_back((int)j);
  return out;
}

std::vector<int> maximal_isotropic(int m, const BinaryForm& form) {
  if (form.m != m) throw std::invalid_argument("form size mismatch");
  std::vector<int> kept;
  for (int i = 0; i < m; ++i) {
    bool ok = true;
    for (int j : kept)
      if (form.k[i][j]) { ok = false; break; }
    if (ok) kept.push_back(i);
  }
  return kept;
}

}  // namespace stab
