#include "ribbonforge/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <vector>

#include "ribbonforge/errors.hpp"

namespace ribbonforge {

namespace {

using Word = std::uint16_t;

// Integer view of a presentation: arrows as (edge id, direction) plus the
// slot of each arrow's partner.
struct IntArrow {
  std::size_t edge;
  bool along;
  ArrowSlot partner;
};

std::vector<std::vector<IntArrow>> integer_view(const ArrowPresentation& g) {
  const auto labels = g.labels();
  std::vector<std::vector<IntArrow>> out(g.vertex_count());
  for (std::size_t c = 0; c < g.vertex_count(); ++c)
    out[c].resize(g.curves()[c].arrows.size());
  for (std::size_t e = 0; e < labels.size(); ++e) {
    auto [a, b] = g.slots(labels[e]);
    out[a.curve][a.position] = {e, g.at(a).direction == Direction::Along, b};
    out[b.curve][b.position] = {e, g.at(b).direction == Direction::Along, a};
  }
  return out;
}

// Encoding of one component, traversed from `start` with the start curve
// read forward or backward. Every other curve is entered at the partner of
// the first arrow leading to it and oriented so the entry arrow reads like
// its partner. An edge is written as its first-occurrence number; the bit
// of its second arrow says whether the two arrows read differently, which
// is what survives reorienting the edge disc. Every choice is determined by
// the start, so the minimum over starts is invariant under the group.
std::vector<Word> encode_from(const std::vector<std::vector<IntArrow>>& view, ArrowSlot start, bool start_forward,
                              std::size_t component_curves, std::size_t edge_total) {
  struct Entry {
    ArrowSlot slot;
    bool forward;
  };
  std::vector<Word> out;
  out.push_back(static_cast<Word>(component_curves));
  std::vector<bool> visited(view.size(), false);
  std::vector<int> number(edge_total, -1);
  std::vector<bool> first_read(edge_total, true);
  int next_number = 0;
  std::deque<Entry> queue{{start, start_forward}};
  while (!queue.empty()) {
    const Entry entry = queue.front();
    queue.pop_front();
    if (visited[entry.slot.curve]) continue;
    visited[entry.slot.curve] = true;
    const auto& curve = view[entry.slot.curve];
    const std::size_t n = curve.size();
    const bool forward = entry.forward;
    out.push_back(static_cast<Word>(n));
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t p = forward ? (entry.slot.position + i) % n : (entry.slot.position + n - i) % n;
      const IntArrow& a = curve[p];
      const bool reads_along = (a.along == forward);
      if (number[a.edge] < 0) {
        number[a.edge] = next_number++;
        first_read[a.edge] = reads_along;
        out.push_back(static_cast<Word>(number[a.edge] * 2));
        if (!visited[a.partner.curve]) {
          const bool partner_along = view[a.partner.curve][a.partner.position].along;
          queue.push_back({a.partner, partner_along == reads_along});
        }
      } else {
        out.push_back(static_cast<Word>(number[a.edge] * 2 + (reads_along == first_read[a.edge] ? 0 : 1)));
      }
    }
  }
  return out;
}

void append_word(std::string& s, Word w) {
  s.push_back(static_cast<char>(w >> 8));
  s.push_back(static_cast<char>(w & 0xff));
}

Word read_word(const std::string& s, std::size_t& pos) {
  if (pos + 2 > s.size()) throw InternalInvariantViolation("truncated canonical key");
  const Word w = static_cast<Word>((static_cast<unsigned char>(s[pos]) << 8) |
                                   static_cast<unsigned char>(s[pos + 1]));
  pos += 2;
  return w;
}

}  // namespace

std::string CanonicalKey::hex() const {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(encoding.size() * 2);
  for (unsigned char c : encoding) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 0xf]);
  }
  return out;
}

CanonicalKey canonical_key(const ArrowPresentation& g, std::size_t max_edges) {
  if (g.edge_count() > max_edges) throw SizeBoundExceeded("canonical_key edges", g.edge_count(), max_edges);
  const auto view = integer_view(g);
  const ComponentPartition parts = component_partition(g);

  std::vector<std::vector<Word>> component_codes;
  component_codes.reserve(parts.count());
  for (const auto& curves : parts.curves) {
    std::vector<Word> best;
    bool have = false;
    for (std::size_t c : curves) {
      for (std::size_t p = 0; p < view[c].size(); ++p) {
        for (bool forward : {true, false}) {
          auto code = encode_from(view, {c, p}, forward, curves.size(), g.edge_count());
          if (!have || code < best) {
            best = std::move(code);
            have = true;
          }
        }
      }
    }
    if (!have) best = {1, 0};  // isolated vertex
    component_codes.push_back(std::move(best));
  }
  std::sort(component_codes.begin(), component_codes.end());

  CanonicalKey key;
  append_word(key.encoding, static_cast<Word>(component_codes.size()));
  for (const auto& code : component_codes)
    for (Word w : code) append_word(key.encoding, w);
  return key;
}

ArrowPresentation decode_key(const CanonicalKey& key) {
  std::size_t pos = 0;
  std::vector<Curve> raw;
  std::size_t offset = 0;
  const Word component_count = read_word(key.encoding, pos);
  for (Word comp = 0; comp < component_count; ++comp) {
    const Word curve_count = read_word(key.encoding, pos);
    std::size_t max_number = 0;
    for (Word c = 0; c < curve_count; ++c) {
      const Word len = read_word(key.encoding, pos);
      Curve curve;
      for (Word i = 0; i < len; ++i) {
        const Word code = read_word(key.encoding, pos);
        const std::size_t number = code / 2;
        max_number = std::max(max_number, number + 1);
        curve.arrows.push_back({"e" + std::to_string(offset + number + 1),
                                (code % 2 == 0) ? Direction::Along : Direction::Against});
      }
      raw.push_back(std::move(curve));
    }
    offset += max_number;
  }
  if (pos != key.encoding.size()) throw InternalInvariantViolation("trailing bytes in canonical key");
  return validate(std::move(raw));
}

ArrowPresentation canonical_form(const ArrowPresentation& g, std::size_t max_edges) {
  return decode_key(canonical_key(g, max_edges));
}

bool equivalent(const ArrowPresentation& g, const ArrowPresentation& h, std::size_t max_edges) {
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) {
    // still enforce the bound so the contract does not depend on the shortcut
    if (g.edge_count() > max_edges) throw SizeBoundExceeded("canonical_key edges", g.edge_count(), max_edges);
    if (h.edge_count() > max_edges) throw SizeBoundExceeded("canonical_key edges", h.edge_count(), max_edges);
    return false;
  }
  return canonical_key(g, max_edges) == canonical_key(h, max_edges);
}

}  // namespace ribbonforge
