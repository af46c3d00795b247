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


#pragma once

#include <array>
#include <cstdint>
#include <string_view>

#include "mpcsdg/ring/fixed_point.h"

typedef struct evp_cipher_ctx_st EVP_CIPHER_CTX;

namespace mpcsdg {

using Seed = std::array<uint8_t, 16>;

// SHA-256 of (label, key, a, b), truncated to 128 bits. Used for every seed
// derivation so streams for distinct purposes never overlap.
Seed DeriveSeed(std::string_view label, const Seed& key, uint64_t a = 0,
                uint64_t b = 0);
Seed SeedFromMaster(uint64_t master, std::string_view label, uint64_t a = 0,
                    uint64_t b = 0);
uint64_t DeriveWord(uint64_t master, std::string_view label, uint64_t a = 0,
                    uint64_t b = 0);

// AES-128 in counter mode over an all-zero plaintext. Output is a pure
// function of the seed and the number of words drawn so far.
class Prg {
 public:
  explicit Prg(const Seed& seed);
  ~Prg();
  Prg(Prg&& other) noexcept;
  Prg& operator=(Prg&& other) noexcept;
  Prg(const Prg&) = delete;
  Prg& operator=(const Prg&) = delete;

  void Fill(uint64_t* out, std::size_t n);
  Words Next(std::size_t n);
  uint64_t NextWord();
  Seed NextSeed();
  // Uniform integer in [0, bound), by rejection.
  uint64_t Uniform(uint64_t bound);

 private:
  EVP_CIPHER_CTX* ctx_ = nullptr;
};

}  // namespace mpcsdg
