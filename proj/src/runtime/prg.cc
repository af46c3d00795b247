// Copyright 2026 The mpcsdg Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "mpcsdg/runtime/prg.h"

#include <openssl/evp.h>
#include <openssl/sha.h>

#include <algorithm>
#include <bit>
#include <cstring>
#include <vector>

#include "mpcsdg/errors.h"

namespace mpcsdg {

namespace {

void AppendWord(std::vector<uint8_t>& buf, uint64_t v) {
  for (int i = 0; i < 8; ++i) buf.push_back(static_cast<uint8_t>(v >> (8 * i)));
}

std::array<uint8_t, 32> Sha(std::string_view label, const uint8_t* key,
                            std::size_t key_len, uint64_t a, uint64_t b) {
  std::vector<uint8_t> buf;
  AppendWord(buf, label.size());
  buf.insert(buf.end(), label.begin(), label.end());
  buf.insert(buf.end(), key, key + key_len);
  AppendWord(buf, a);
  AppendWord(buf, b);
  std::array<uint8_t, 32> digest;
  SHA256(buf.data(), buf.size(), digest.data());
  return digest;
}

}  // namespace

Seed DeriveSeed(std::string_view label, const Seed& key, uint64_t a,
                uint64_t b) {
  const auto d = Sha(label, key.data(), key.size(), a, b);
  Seed s;
  std::memcpy(s.data(), d.data(), s.size());
  return s;
}

Seed SeedFromMaster(uint64_t master, std::string_view label, uint64_t a,
                    uint64_t b) {
  uint8_t key[8];
  for (int i = 0; i < 8; ++i) key[i] = static_cast<uint8_t>(master >> (8 * i));
  const auto d = Sha(label, key, 8, a, b);
  Seed s;
  std::memcpy(s.data(), d.data(), s.size());
  return s;
}

uint64_t DeriveWord(uint64_t master, std::string_view label, uint64_t a,
                    uint64_t b) {
  const Seed s = SeedFromMaster(master, label, a, b);
  uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | s[i];
  return v;
}

Prg::Prg(const Seed& seed) {
  ctx_ = EVP_CIPHER_CTX_new();
  const uint8_t iv[16] = {0};
  if (ctx_ == nullptr ||
      EVP_EncryptInit_ex(ctx_, EVP_aes_128_ctr(), nullptr, seed.data(), iv) !=
          1) {
    throw Error("AES-CTR initialization failed");
  }
}

Prg::~Prg() {
  if (ctx_ != nullptr) EVP_CIPHER_CTX_free(ctx_);
}

Prg::Prg(Prg&& other) noexcept : ctx_(other.ctx_) { other.ctx_ = nullptr; }

Prg& Prg::operator=(Prg&& other) noexcept {
  if (this != &other) {
    if (ctx_ != nullptr) EVP_CIPHER_CTX_free(ctx_);
    ctx_ = other.ctx_;
    other.ctx_ = nullptr;
  }
  return *this;
}

void Prg::Fill(uint64_t* out, std::size_t n) {
  if (n == 0) return;
  std::memset(out, 0, n * 8);
  auto* p = reinterpret_cast<uint8_t*>(out);
  int len = 0;
  // CTR keystream XOR zeros; EVP keeps the counter across calls.
  std::size_t done = 0;
  const std::size_t total = n * 8;
  while (done < total) {
    const int chunk = static_cast<int>(std::min<std::size_t>(total - done, 1 << 30));
    if (EVP_EncryptUpdate(ctx_, p + done, &len, p + done, chunk) != 1) {
      throw Error("AES-CTR keystream failed");
    }
    done += static_cast<std::size_t>(chunk);
  }
  // Words are read little-endian so output is platform independent.
  if constexpr (std::endian::native != std::endian::little) {
    for (std::size_t i = 0; i < n; ++i) {
      uint64_t w = 0;
      for (int b = 7; b >= 0; --b) w = (w << 8) | p[8 * i + b];
      out[i] = w;
    }
  }
}

Words Prg::Next(std::size_t n) {
  Words w(n);
  Fill(w.data(), n);
  return w;
}

uint64_t Prg::NextWord() {
  uint64_t w;
  Fill(&w, 1);
  return w;
}

Seed Prg::NextSeed() {
  uint64_t w[2];
  Fill(w, 2);
  Seed s;
  for (int i = 0; i < 8; ++i) {
    s[i] = static_cast<uint8_t>(w[0] >> (8 * i));
    s[8 + i] = static_cast<uint8_t>(w[1] >> (8 * i));
  }
  return s;
}

uint64_t Prg::Uniform(uint64_t bound) {
  if (bound == 0) throw ParameterError("uniform bound must be positive");
  const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  while (true) {
    const uint64_t w = NextWord();
    if (w < limit) return w % bound;
  }
}

}  // namespace mpcsdg
