#pragma once

#include <string>

#include <json.hpp>

#include "bpb/correct.hpp"
#include "bpb/disjoint_support.hpp"
#include "bpb/lattice.hpp"

namespace bpb {

using Json = nlohmann::json;

// Wire encoding shared by every file format and the CLI:
//   scalar     rational mode: string "p/q"; float mode: JSON number
//              (decoding accepts "p/q", integer and decimal strings and
//              plain numbers in either mode)
//   space      {"weights": [scalar, ...]}
//   vector     [scalar, ...]
//   operator   {"matrix": [[scalar, ...], ...], "domain": space, "codomain": space}
//   index set  sorted array of 1-based atom indices
//
// Decoders throw Error(ParseError) with a JSON-pointer style location.

template <class Real>
Json encode_scalar(const Real& x);
template <class Real>
Real decode_scalar(const Json& j, const std::string& where);

template <class Real>
Json encode_space(const MeasureSpace<Real>& space);
template <class Real>
SpacePtr<Real> decode_space(const Json& j, const std::string& where);

template <class Real>
Json encode_vector(const LatticeVector<Real>& f);
template <class Real>
std::vector<Real> decode_values(const Json& j, const std::string& where);
template <class Real>
LatticeVector<Real> decode_vector(const Json& j, SpacePtr<Real> space, const std::string& where);

Json encode_index_set(const IndexSet& set);
IndexSet decode_index_set(const Json& j, std::size_t universe, const std::string& where);

template <class Real>
Json encode_operator(const LinearOperator<Real>& T);
/// Missing "domain"/"codomain" default to counting measures.
template <class Real>
LinearOperator<Real> decode_operator(const Json& j, const std::string& where);

template <class Real>
Json encode_entries(const std::vector<CertificateEntry<Real>>& entries);
template <class Real>
Json encode_witness(const LemmaWitness<Real>& w);
template <class Real>
Json encode_partition(const DomainPartition<Real>& p);
template <class Real>
Json encode_correction(const Correction<Real>& c);
template <class Real>
Json encode_report(const VerificationReport<Real>& r);

/// Parses text, turning nlohmann parse errors into Error(ParseError) with the
/// byte offset.
Json parse_json_text(const std::string& text, const std::string& source);
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace bpb
