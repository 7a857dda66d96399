// Copyright 2026 The Bananaworld Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bananaworld/polytopes.hpp"

namespace bananaworld {

DeterministicVertex DeterministicVertex::from_functions(const std::array<Outcome, 4> &alice,
                                                        const std::array<Outcome, 4> &bob) {
  unsigned index = 0;
  for (std::size_t c = 0; c < 4; ++c) {
    index |= static_cast<unsigned>(bit(alice[c])) << (7 - c);
    index |= static_cast<unsigned>(bit(bob[c])) << (3 - c);
  }
  return DeterministicVertex(static_cast<std::uint8_t>(index));
}

bool DeterministicVertex::is_local() const {
  for (int s = 0; s < 2; ++s) {
    if (alice_bit(s, 0) != alice_bit(s, 1)) return false;
    if (bob_bit(0, s) != bob_bit(1, s)) return false;
  }
  return true;
}

std::vector<DeterministicVertex> enumerate_deterministic(VertexKind kind) {
  std::vector<DeterministicVertex> out;
  for (unsigned i = 0; i < 256; ++i) {
    DeterministicVertex v(static_cast<std::uint8_t>(i));
    const bool local = v.is_local();
    if (kind == VertexKind::All || (kind == VertexKind::Local) == local) out.push_back(v);
  }
  return out;
}

std::vector<PrBox> pr_boxes() {
  std::vector<PrBox> out;
  for (int code = 0; code < 8; ++code) out.push_back({(code >> 2) & 1, (code >> 1) & 1, code & 1});
  return out;
}

const char *to_string(MembershipStatus status) {
  switch (status) {
    case MembershipStatus::In:
      return "in";
    case MembershipStatus::Out:
      return "out";
    case MembershipStatus::BoundaryIndeterminate:
      return "boundary-indeterminate";
  }
  return "?";
}

const char *to_string(PolytopeKind kind) { return kind == PolytopeKind::Local ? "local" : "no_signaling"; }

}  // namespace bananaworld
