#include "bpb/json_io.hpp"

#include <fstream>
#include <sstream>

namespace bpb {

namespace {

[[noreturn]] void parse_fail(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::ParseError, (where.empty() ? std::string("/") : where) + ": " + what);
}

const Json& member(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) parse_fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) parse_fail(where, std::string("missing key \"") + key + "\"");
  return *it;
}

}  // namespace

template <class Real>
Json encode_scalar(const Real& x) {
  if constexpr (ScalarTraits<Real>::exact)
    return format_rational(x);
  else
    return x;
}

template <class Real>
Real decode_scalar(const Json& j, const std::string& where) {
  try {
    if (j.is_string()) return ScalarTraits<Real>::parse(j.get<std::string>());
    if (j.is_number_integer()) return ScalarTraits<Real>::from_int(j.get<long>());
    if (j.is_number_float()) {
      if constexpr (ScalarTraits<Real>::exact)
        return parse_rational(j.dump());  // shortest round-trip decimal text
      else
        return j.get<double>();
    }
  } catch (const Error& e) {
    parse_fail(where, e.what());
  }
  parse_fail(where, "expected a number or a \"p/q\" string");
}

template <class Real>
Json encode_space(const MeasureSpace<Real>& space) {
  Json w = Json::array();
  for (const Real& x : space.weights()) w.push_back(encode_scalar(x));
  return Json{{"weights", w}};
}

template <class Real>
SpacePtr<Real> decode_space(const Json& j, const std::string& where) {
  std::vector<Real> w = decode_values<Real>(member(j, "weights", where), where + "/weights");
  try {
    return MeasureSpace<Real>::make(std::move(w));
  } catch (const Error& e) {
    parse_fail(where, e.what());
  }
}

template <class Real>
Json encode_vector(const LatticeVector<Real>& f) {
  Json out = Json::array();
  for (const Real& x : f.values()) out.push_back(encode_scalar(x));
  return out;
}

template <class Real>
std::vector<Real> decode_values(const Json& j, const std::string& where) {
  if (!j.is_array()) parse_fail(where, "expected an array");
  std::vector<Real> out;
  out.reserve(j.size());
  for (std::size_t k = 0; k < j.size(); ++k) out.push_back(decode_scalar<Real>(j[k], where + "/" + std::to_string(k)));
  return out;
}

template <class Real>
LatticeVector<Real> decode_vector(const Json& j, SpacePtr<Real> space, const std::string& where) {
  std::vector<Real> v = decode_values<Real>(j, where);
  if (v.size() != space->size())
    parse_fail(where, "expected " + std::to_string(space->size()) + " values, got " + std::to_string(v.size()));
  return LatticeVector<Real>(std::move(space), std::move(v));
}

Json encode_index_set(const IndexSet& set) {
  Json out = Json::array();
  for (std::size_t i : set.members()) out.push_back(i + 1);
  return out;
}

IndexSet decode_index_set(const Json& j, std::size_t universe, const std::string& where) {
  if (!j.is_array()) parse_fail(where, "expected an array of 1-based indices");
  IndexSet out(universe);
  for (std::size_t k = 0; k < j.size(); ++k) {
    if (!j[k].is_number_integer()) parse_fail(where + "/" + std::to_string(k), "expected an integer");
    const long idx = j[k].get<long>();
    if (idx < 1 || static_cast<std::size_t>(idx) > universe)
      parse_fail(where + "/" + std::to_string(k), "index " + std::to_string(idx) + " outside 1.." + std::to_string(universe));
    out.insert(static_cast<std::size_t>(idx - 1));
  }
  return out;
}

template <class Real>
Json encode_operator(const LinearOperator<Real>& T) {
  Json rows = Json::array();
  for (std::size_t j = 0; j < T.rows(); ++j) {
    Json row = Json::array();
    for (std::size_t i = 0; i < T.cols(); ++i) row.push_back(encode_scalar(T.at(j, i)));
    rows.push_back(std::move(row));
  }
  return Json{{"matrix", rows}, {"domain", encode_space(*T.domain())}, {"codomain", encode_space(*T.codomain())}};
}

template <class Real>
LinearOperator<Real> decode_operator(const Json& j, const std::string& where) {
  const Json& m = member(j, "matrix", where);
  if (!m.is_array() || m.empty()) parse_fail(where + "/matrix", "expected a non-empty array of rows");
  std::vector<std::vector<Real>> rows;
  for (std::size_t r = 0; r < m.size(); ++r)
    rows.push_back(decode_values<Real>(m[r], where + "/matrix/" + std::to_string(r)));
  const std::size_t cols = rows.front().size();
  if (cols == 0) parse_fail(where + "/matrix", "rows must be non-empty");
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (rows[r].size() != cols)
      parse_fail(where + "/matrix/" + std::to_string(r),
                 "row has " + std::to_string(rows[r].size()) + " entries, expected " + std::to_string(cols));
  SpacePtr<Real> dom = j.contains("domain") ? decode_space<Real>(j["domain"], where + "/domain")
                                            : MeasureSpace<Real>::counting(cols);
  SpacePtr<Real> cod = j.contains("codomain") ? decode_space<Real>(j["codomain"], where + "/codomain")
                                              : MeasureSpace<Real>::counting(rows.size());
  if (dom->size() != cols) parse_fail(where + "/domain", "domain size differs from the column count");
  if (cod->size() != rows.size()) parse_fail(where + "/codomain", "codomain size differs from the row count");
  return LinearOperator<Real>(std::move(dom), std::move(cod), rows);
}

template <class Real>
Json encode_entries(const std::vector<CertificateEntry<Real>>& entries) {
  Json out = Json::array();
  for (const auto& e : entries)
    out.push_back(Json{{"name", e.name},
                       {"lhs", encode_scalar(e.lhs)},
                       {"relation", e.relation},
                       {"rhs", encode_scalar(e.rhs)},
                       {"pass", e.pass}});
  return out;
}

template <class Real>
Json encode_witness(const LemmaWitness<Real>& w) {
  return Json{{"g1", encode_vector(w.g1)},         {"g2", encode_vector(w.g2)},
              {"W", encode_index_set(w.W)},        {"G1", encode_index_set(w.G1)},
              {"G2", encode_index_set(w.G2)},      {"normalizer", encode_scalar(w.normalizer)}};
}

template <class Real>
Json encode_partition(const DomainPartition<Real>& p) {
  return Json{{"A", encode_index_set(p.A)},
              {"B", encode_index_set(p.B)},
              {"C", encode_index_set(p.C)},
              {"eta", encode_scalar(p.eta)}};
}

template <class Real>
Json encode_correction(const Correction<Real>& c) {
  const auto& k = c.certificate;
  Json cert{{"eps", encode_scalar(k.eps)},
            {"eps_lemma", encode_scalar(k.eps_lemma)},
            {"dist_point", encode_scalar(k.dist_point)},
            {"dist_op_bound", encode_scalar(k.dist_op_bound)},
            {"dist_op_exact", k.dist_op_exact ? encode_scalar(*k.dist_op_exact) : Json(nullptr)},
            {"dist_VS_bound", encode_scalar(k.dist_VS_bound)},
            {"norm_V", encode_scalar(k.norm_V)},
            {"sfc_mass", encode_scalar(k.sfc_mass)},
            {"V", encode_operator(k.V.op())},
            {"lemma_witness", encode_witness(k.lemma_witness)},
            {"partition", encode_partition(k.partition)},
            {"chain", encode_entries(k.chain)}};
  return Json{{"T", encode_operator(c.op.op())}, {"u0", encode_vector(c.u0)}, {"eta", encode_scalar(c.eta)},
              {"certificate", std::move(cert)}};
}

template <class Real>
Json encode_report(const VerificationReport<Real>& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back(Json{{"name", c.name},
                          {"pass", c.pass},
                          {"value", c.value ? encode_scalar(*c.value) : Json(nullptr)},
                          {"bound", c.bound ? encode_scalar(*c.bound) : Json(nullptr)},
                          {"detail", c.detail}});
  return Json{{"all_pass", r.all_pass()}, {"checks", std::move(checks)}};
}

Json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ParseError, source + ": byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str(), path);
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, path + ": cannot open for writing");
  out << text;
  if (!out) throw Error(ErrorCode::InvalidArgument, path + ": write failed");
}

#define BPB_INSTANTIATE(Real)                                                                 \
  template Json encode_scalar(const Real&);                                                   \
  template Real decode_scalar(const Json&, const std::string&);                               \
  template Json encode_space(const MeasureSpace<Real>&);                                      \
  template SpacePtr<Real> decode_space(const Json&, const std::string&);                      \
  template Json encode_vector(const LatticeVector<Real>&);                                    \
  template std::vector<Real> decode_values(const Json&, const std::string&);                  \
  template LatticeVector<Real> decode_vector(const Json&, SpacePtr<Real>, const std::string&); \
  template Json encode_operator(const LinearOperator<Real>&);                                 \
  template LinearOperator<Real> decode_operator(const Json&, const std::string&);             \
  template Json encode_entries(const std::vector<CertificateEntry<Real>>&);                   \
  template Json encode_witness(const LemmaWitness<Real>&);                                    \
  template Json encode_partition(const DomainPartition<Real>&);                               \
  template Json encode_correction(const Correction<Real>&);                                   \
  template Json encode_report(const VerificationReport<Real>&);

BPB_INSTANTIATE(Rational)
BPB_INSTANTIATE(double)

#undef BPB_INSTANTIATE

}  // namespace bpb
