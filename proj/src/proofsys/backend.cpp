// Copyright 2026 The carbonzk Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "carbonzk/proofsys/backend.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <stdexcept>

#include "carbonzk/proofsys/groth16.hpp"
#include "carbonzk/util/error.hpp"
#ifdef CARBONZK_ORACLE_BACKEND
#include "carbonzk/proofsys/oracle.hpp"
#endif

namespace carbonzk::proofsys {
namespace {

constexpr uint8_t kFlagInsecureDevSetup = 1;
constexpr uint8_t kFlagNotZeroKnowledge = 2;

Error malformed(const std::string& what) {
  return Error(ErrorCode::kMalformedProof, "artifact: " + what);
}

}  // namespace

std::string_view backend_name(BackendKind kind) {
  switch (kind) {
    case BackendKind::kGroth16: return "groth16-bn254";
    case BackendKind::kOracle: return "oracle";
  }
  return "unknown";
}

BackendKind parse_backend(std::string_view name) {
  for (BackendKind k : {BackendKind::kGroth16, BackendKind::kOracle}) {
    if (backend_name(k) == name) return k;
  }
  throw SchemaViolation("backend", "unknown backend '" + std::string(name) + "'");
}

Bytes encode_artifact(const ArtifactHeader& header, std::span<const uint8_t> payload) {
  ByteWriter w;
  w.raw(std::span<const uint8_t>(reinterpret_cast<const uint8_t*>(kArtifactMagic), 8));
  w.u32(kArtifactVersion);
  w.u8(static_cast<uint8_t>(header.backend));
  w.u8(static_cast<uint8_t>(header.kind));
  uint8_t flags = 0;
  if (header.insecure_dev_setup) flags |= kFlagInsecureDevSetup;
  if (!header.zero_knowledge) flags |= kFlagNotZeroKnowledge;
  w.u8(flags);
  w.raw(header.circuit_digest);
  w.blob(payload);
  return w.take();
}

DecodedArtifact decode_artifact(std::span<const uint8_t> bytes) {
  ByteReader r(bytes);
  auto magic = r.raw(8);
  if (!std::equal(magic.begin(), magic.end(), kArtifactMagic)) throw malformed("bad magic");
  if (r.u32() != kArtifactVersion) throw malformed("unsupported version");
  DecodedArtifact out;
  const uint8_t backend = r.u8();
  if (backend != static_cast<uint8_t>(BackendKind::kGroth16) &&
      backend != static_cast<uint8_t>(BackendKind::kOracle)) {
    throw malformed("unknown backend tag");
  }
  out.header.backend = static_cast<BackendKind>(backend);
  const uint8_t kind = r.u8();
  if (kind != 1 && kind != 2) throw malformed("unknown artifact kind");
  out.header.kind = static_cast<ArtifactKind>(kind);
  const uint8_t flags = r.u8();
  if ((flags & ~(kFlagInsecureDevSetup | kFlagNotZeroKnowledge)) != 0) {
    throw malformed("unknown flags");
  }
  out.header.insecure_dev_setup = (flags & kFlagInsecureDevSetup) != 0;
  out.header.zero_knowledge = (flags & kFlagNotZeroKnowledge) == 0;
  auto digest = r.raw(32);
  std::copy(digest.begin(), digest.end(), out.header.circuit_digest.begin());
  out.payload = r.blob();
  if (!r.done()) throw malformed("trailing bytes");
  return out;
}

BackendKind SetupArtifacts::backend() const { return decode_artifact(verifying_key).header.backend; }
bool SetupArtifacts::insecure_dev_setup() const {
  return decode_artifact(verifying_key).header.insecure_dev_setup;
}
bool SetupArtifacts::zero_knowledge() const {
  return decode_artifact(verifying_key).header.zero_knowledge;
}

std::unique_ptr<Backend> make_backend(BackendKind kind) {
  switch (kind) {
    case BackendKind::kGroth16: return std::make_unique<Groth16Backend>();
    case BackendKind::kOracle:
#ifdef CARBONZK_ORACLE_BACKEND
      return std::make_unique<OracleBackend>();
#else
      throw std::invalid_argument("oracle backend not compiled in");
#endif
  }
  throw std::invalid_argument("unknown backend");
}

bool oracle_backend_available() {
#ifdef CARBONZK_ORACLE_BACKEND
  return true;
#else
  return false;
#endif
}

Bytes read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path.string());
  return Bytes(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_file(const std::filesystem::path& path, std::span<const uint8_t> data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
  if (!out) throw Error(ErrorCode::kIo, "short write to " + path.string());
}

void save_setup(const std::filesystem::path& dir, const SetupArtifacts& setup) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot create " + dir.string());
  write_file(dir / "proving.key", setup.proving_key);
  write_file(dir / "verifying.key", setup.verifying_key);
  if (setup.backend() == BackendKind::kGroth16) {
    const std::string json = verifying_key_to_json(setup.verifying_key);
    write_file(dir / "verifying_key.json",
               std::span<const uint8_t>(reinterpret_cast<const uint8_t*>(json.data()), json.size()));
  }
}

SetupArtifacts load_setup(const std::filesystem::path& dir) {
  SetupArtifacts out;
  out.proving_key = read_file(dir / "proving.key");
  out.verifying_key = read_file(dir / "verifying.key");
  const auto pk = decode_artifact(out.proving_key).header;
  const auto vk = decode_artifact(out.verifying_key).header;
  if (pk.kind != ArtifactKind::kProvingKey || vk.kind != ArtifactKind::kVerifyingKey) {
    throw malformed("key files swapped");
  }
  if (pk.circuit_digest != vk.circuit_digest || pk.backend != vk.backend) {
    throw Error(ErrorCode::kKeyMismatch, "proving and verifying keys belong to different setups");
  }
  out.circuit_digest = vk.circuit_digest;
  return out;
}

}  // namespace carbonzk::proofsys
