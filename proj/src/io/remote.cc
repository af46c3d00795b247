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


#include "mpcsdg/io/remote.h"

#include <map>

#include "mpcsdg/errors.h"
#include "mpcsdg/runtime/session.h"

namespace mpcsdg {
namespace {

constexpr uint64_t kReady = 0x5245414459ULL;

void Append(Words& out, const Words& w) { out.insert(out.end(), w.begin(), w.end()); }

uint64_t Take(const Words& w, std::size_t& off) {
  if (off >= w.size()) throw IntegrityError("truncated message");
  return w[off++];
}

Words TakeN(const Words& w, std::size_t& off, std::size_t n) {
  if (n > w.size() || off + n > w.size()) {
    throw IntegrityError("truncated message");
  }
  Words out(w.begin() + static_cast<std::ptrdiff_t>(off),
            w.begin() + static_cast<std::ptrdiff_t>(off + n));
  off += n;
  return out;
}

void SendWords(Channel& ch, Label label, const Words& payload) {
  ch.Send(TransportFrame{label, 0, payload});
}

Words PackShareMatrix(const ShareMatrix& m) {
  Words out = {m.rows, m.cols};
  Append(out, m.cells.a);
  Append(out, m.cells.b);
  return out;
}

ShareMatrix UnpackShareMatrix(const Words& w, std::size_t& off) {
  const std::size_t rows = Take(w, off);
  const std::size_t cols = Take(w, off);
  if (cols != 0 && rows > w.size() / cols) throw IntegrityError("bad shape");
  ShareMatrix m(rows, cols);
  m.cells.a = TakeN(w, off, rows * cols);
  m.cells.b = TakeN(w, off, rows * cols);
  return m;
}

}  // namespace

Words PackUpload(const CustodianUpload& upload) {
  Words out = {upload.columns.size()};
  for (const auto& c : upload.columns) Append(out, PackString(c));
  out.push_back(upload.rows);
  Append(out, upload.thresholds);
  Append(out, upload.cells);
  return out;
}

CustodianUpload UnpackUpload(const Words& w) {
  std::size_t off = 0;
  CustodianUpload u;
  const std::size_t ncols = Take(w, off);
  if (ncols == 0 || ncols > w.size()) throw IntegrityError("bad column count");
  for (std::size_t i = 0; i < ncols; ++i) u.columns.push_back(UnpackString(w, off));
  u.rows = Take(w, off);
  if (u.rows > w.size() / ncols) throw IntegrityError("bad row count");
  u.thresholds = TakeN(w, off, 2);
  u.cells = TakeN(w, off, u.rows * ncols);
  if (off != w.size()) throw IntegrityError("trailing data in upload");
  return u;
}

PartyServerResult RunPartyServer(const PartyServerOptions& opt) {
  const PipelineConfig& config = opt.config;
  config.Validate();
  if (opt.index < 0 || opt.index >= kNumParties) {
    throw ParameterError("party id must be 1, 2 or 3");
  }
  if (static_cast<int>(opt.lower_peers.size()) != opt.index) {
    throw ParameterError("party " + std::to_string(opt.index + 1) + " needs " +
                         std::to_string(opt.index) + " peer address(es)");
  }
  auto listener = opt.listener ? opt.listener
                               : std::make_shared<TcpListener>(opt.listen);

  std::array<std::shared_ptr<Channel>, kNumParties> peers;
  std::vector<std::shared_ptr<TcpChannel>> custodians(config.n_custodians);
  std::optional<Party> party;
  SessionOptions session;
  session.master_seed = config.seed;
  session.canonical_config = config.Canonical();
  const auto close_all = [&] {
    for (auto& p : peers) if (p) p->Close();
    for (auto& c : custodians) if (c) c->Close();
  };

  int missing_parties = kNumParties - 1 - opt.index;
  int missing_custodians = config.n_custodians;
  const auto accept_one = [&] {
    auto ch = listener->Accept(opt.timeout);
    const Words hello = ch->RecvFor(opt.timeout).payload;
    if (hello.size() != 2) throw TransportError("malformed hello");
    const uint64_t id = hello[1];
    if (hello[0] == static_cast<uint64_t>(PeerKind::kParty) &&
        id > static_cast<uint64_t>(opt.index) && id < kNumParties &&
        !peers[id]) {
      peers[id] = ch;
      --missing_parties;
    } else if (hello[0] == static_cast<uint64_t>(PeerKind::kCustodian) &&
               id >= 1 && id <= custodians.size() && !custodians[id - 1]) {
      custodians[id - 1] = ch;
      --missing_custodians;
    } else {
      throw TransportError("unexpected or duplicate hello");
    }
  };
  try {
    for (int j = 0; j < opt.index; ++j) {
      auto ch = Dial(opt.lower_peers[j], opt.timeout);
      SendWords(*ch, Label::kSetup,
                {static_cast<uint64_t>(PeerKind::kParty),
                 static_cast<uint64_t>(opt.index)});
      peers[j] = ch;
    }
    // Custodians that connect early are parked until the handshake is done.
    while (missing_parties > 0) accept_one();
    party.emplace(opt.index, config.fp, peers);
    Setup(*party, session);
    while (missing_custodians > 0) accept_one();
  } catch (...) {
    close_all();
    throw;
  }

  PartyServerResult result;
  try {
    std::vector<CustodianUpload> uploads;
    for (auto& c : custodians) {
      SendWords(*c, Label::kInput, {kReady});
      uploads.push_back(UnpackUpload(c->RecvFor(opt.timeout).payload));
    }
    result.outcome = RunPipeline(*party, uploads, config);
    for (auto& c : custodians) {
      Words msg = {result.outcome.publish ? 1u : 0u};
      if (result.outcome.synthetic) {
        Append(msg, PackShareMatrix(*result.outcome.synthetic));
      }
      SendWords(*c, Label::kReveal, msg);
    }
  } catch (const std::exception& e) {
    const std::string dump = party->ledger().Dump();
    close_all();
    throw ProtocolAbort("party " + std::to_string(opt.index + 1) + ": " +
                            e.what(),
                        dump);
  }
  result.ledger = party->ledger();
  result.openings = party->openings();
  close_all();
  return result;
}

std::optional<ClearDataset> RunCustodian(const CustodianOptions& opt) {
  opt.config.fp.Validate();
  if (opt.id < 1) throw ParameterError("custodian id must be >= 1");
  Prg rng(SeedFromMaster(opt.config.seed, "custodian",
                         static_cast<uint64_t>(opt.id - 1)));
  auto shares =
      ShareCustodianInput(opt.data, opt.thresholds, opt.config.fp, rng);

  std::array<std::shared_ptr<TcpChannel>, 3> servers;
  const auto close_all = [&] {
    for (auto& s : servers) if (s) s->Close();
  };
  try {
    for (int p = 0; p < 3; ++p) {
      servers[p] = Dial(opt.servers[p], opt.timeout);
      SendWords(*servers[p], Label::kSetup,
                {static_cast<uint64_t>(PeerKind::kCustodian),
                 static_cast<uint64_t>(opt.id)});
    }
    for (int p = 0; p < 3; ++p) {
      const Words ready = servers[p]->Recv().payload;
      if (ready.size() != 1 || ready[0] != kReady) {
        throw TransportError("party " + std::to_string(p + 1) +
                             " did not acknowledge the upload");
      }
      SendWords(*servers[p], Label::kInput, PackUpload(shares[p]));
    }
    std::array<ShareVec, 3> views;
    std::optional<std::size_t> rows;
    bool publish = false;
    for (int p = 0; p < 3; ++p) {
      const Words msg = servers[p]->Recv().payload;
      std::size_t off = 0;
      const bool pub = Take(msg, off) == 1;
      if (p > 0 && pub != publish) {
        throw IntegrityError("parties disagree on the publish decision");
      }
      publish = pub;
      if (!publish) continue;
      const ShareMatrix m = UnpackShareMatrix(msg, off);
      if (m.cols != opt.data.d() + 1 || (rows && *rows != m.rows)) {
        throw IntegrityError("synthetic output has an unexpected shape");
      }
      rows = m.rows;
      views[p] = m.cells;
    }
    close_all();
    if (!publish) return std::nullopt;
    return DecodeSynthetic(Reconstruct(views), *rows, opt.data.gene_names,
                           opt.config.fp);
  } catch (...) {
    close_all();
    throw;
  }
}

}  // namespace mpcsdg
