// gf.cpp — table construction for the GF(2^m) contexts.

#include "k3moduli/gf.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace k3m {

namespace {

// One fixed modulus per supported degree (see header).
uint32_t modulus_for(unsigned m) {
  switch (m) {
    case 1: return 0b10;                 // x
    case 2: return 0b111;                // x^2+x+1
    case 4: return 0b10011;              // x^4+x+1
    case 8: return 0b100011101;          // x^8+x^4+x^3+x^2+1
    case 12: return 0b1000001010011;     // x^12+x^6+x^4+x+1
    default:
      raise(ErrorCode::BAD_INPUT, "unsupported field degree 2^" + std::to_string(m));
  }
}

// Multiply residues mod the degree-m modulus by shift-and-reduce.
uint32_t clmul_mod(uint32_t a, uint32_t b, uint32_t modulus, unsigned m) {
  uint32_t r = 0;
  uint32_t top = 1u << m;
  while (a) {
    if (a & 1) r ^= b;
    a >>= 1;
    b <<= 1;
    if (b & top) b ^= modulus;
  }
  return r;
}

}  // namespace

GFContext::GFContext(unsigned m) : m_(m), modulus_(modulus_for(m)) {
  uint32_t q = 1u << m_;
  log_.assign(q, 0);
  alog_.assign(q, 0);
  if (m_ == 1) {
    // Prime field: trivial multiplicative group.
    alog_[0] = 1;
    log_[1] = 0;
  } else {
    // Generate the multiplicative group by x and record log/antilog pairs.
    // The modulus is required to be primitive: the first return to 1 must
    // happen after exactly 2^m - 1 steps.
    uint32_t x = 1;
    for (uint32_t i = 0; i < q - 1; ++i) {
      alog_[i] = uint16_t(x);
      log_[x] = uint16_t(i);
      x = clmul_mod(x, 2, modulus_, m_);
      if (x == 1 && i + 1 != q - 1)
        raise(ErrorCode::BAD_INPUT, "modulus for GF(2^" + std::to_string(m_) + ") is not primitive");
    }
    if (x != 1)
      raise(ErrorCode::BAD_INPUT, "modulus for GF(2^" + std::to_string(m_) + ") is not irreducible");
  }
  has_f4_ = (m_ % 2 == 0);
  f4img_[0] = 0;
  f4img_[1] = 1;
  if (has_f4_) {
    uint16_t w = alog_[(q - 1) / 3];
    f4img_[2] = w;
    f4img_[3] = uint16_t(w ^ 1);  // w+1
    // Sanity: w^2 + w + 1 = 0.
    if ((mul(w, w) ^ w ^ 1) != 0)
      raise(ErrorCode::BAD_INPUT, "F4 embedding failed consistency check");
  } else {
    f4img_[2] = f4img_[3] = 0;
  }
}

const GFContext& GFContext::get(unsigned m) {
  static std::mutex mu;
  static std::map<unsigned, std::unique_ptr<GFContext>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it == cache.end())
    it = cache.emplace(m, std::unique_ptr<GFContext>(new GFContext(m))).first;
  return *it->second;
}

uint16_t GFContext::pow(uint16_t a, uint64_t e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  uint64_t le = (uint64_t(log_[a]) * (e % (order() - 1))) % (order() - 1);
  return alog_[le];
}

uint16_t GFContext::embed_f4(F4 a) const {
  if (!has_f4_ && a.v >= 2)
    raise(ErrorCode::BAD_INPUT, "F4 does not embed in GF(2^" + std::to_string(m_) + ")");
  return f4img_[a.v];
}

GFElement GFElement::sqrt() const {
  GFElement r = *this;
  for (unsigned i = 1; i < ctx().degree(); ++i) r = r.square();
  return r;
}

}  // namespace k3m
