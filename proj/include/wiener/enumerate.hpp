#pragma once
// Isomorph-free exhaustive generation of connected graphs by canonical
// augmentation (grow by one vertex, keep a child only when the added vertex
// is equivalent to the canonical deletion vertex), plus streaming ingestion
// of externally supplied graph6 lines.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "wiener/canonical.hpp"
#include "wiener/graph.hpp"

namespace wiener {

constexpr int kMaxGenOrder = 10;

// Single-word certificate for orders <= 11: upper-triangle bit t of the
// canonical relabeling stored at word bit 63-t, so ascending word order is
// lexicographic certificate order.
using CertWord = std::uint64_t;

Graph graph_from_certword(CertWord w, int n);
Certificate certificate_from_certword(CertWord w, int n);
CertWord certword_from_certificate(const Certificate& cert);

// One word per isomorphism class of connected graphs on n vertices, sorted.
std::vector<CertWord> connected_certs_serial(int n);
std::vector<CertWord> connected_certs_parallel(int n, int workers);
// Memoized front end; serial kernel for workers <= 1.
const std::vector<CertWord>& connected_certs(int n, int workers = 1);

// Visit one representative per isomorphism class (all of them, or only those
// with exactly k cut vertices).
void for_each_connected(
    int n, const std::function<void(const Graph&, const Certificate&)>& sink);
void for_each_in_class(
    int n, int k,
    const std::function<void(const Graph&, const Certificate&)>& sink);

struct IngestOptions {
  bool strict = true;           // throw on the first bad line
  bool connected_only = true;   // drop (or reject) disconnected inputs
  int require_order = 0;        // 0 = any
  int require_cut_count = -1;   // -1 = any
  bool triangle_free_only = false;
};

struct IngestIssue {
  int line = 0;
  std::string message;
};

struct IngestSummary {
  std::uint64_t lines = 0;     // non-blank input lines seen
  std::uint64_t accepted = 0;  // graphs handed to the sink
  std::uint64_t filtered = 0;  // well-formed but dropped by the filters
  std::vector<IngestIssue> issues;  // malformed lines (non-strict mode only)
};

IngestSummary ingest_graph6(std::istream& in, const IngestOptions& opt,
                            const std::function<void(const Graph&)>& sink);

namespace detail {

// adjacency rows of a packed certificate word (rows must hold n words)
void unpack_certword(CertWord w, int n, std::uint64_t* rows);

}  // namespace detail

}  // namespace wiener
