#include "q2n/json_io.hpp"

#include <sstream>

namespace q2n {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

std::string string_field(const Json& j, const char* key) {
  const Json& f = field(j, key);
  if (!f.is_string()) throw ParseError(std::string("field '") + key + "' must be a string");
  return f.get<std::string>();
}

}  // namespace

Json rational_to_json(const Rational& r) { return Json(r.str()); }

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw ParseError("rational must be a \"p/q\" string");
  return Rational::parse(j.get<std::string>());
}

Json vector_to_json(const VectorQ& v) {
  Json arr = Json::array();
  for (int i = 0; i < v.dim(); ++i) arr.push_back(v[i].str());
  return arr;
}

VectorQ vector_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("vector must be a nonempty array");
  std::vector<Rational> comps;
  comps.reserve(j.size());
  for (const auto& c : j) comps.push_back(rational_from_json(c));
  return VectorQ(std::move(comps));
}

Json interval_to_json(const Interval& iv) {
  Json j = Json::object();
  j["lo"] = iv.lo().str();
  j["hi"] = iv.hi().str();
  return j;
}

Interval interval_from_json(const Json& j) {
  return Interval(Rational::parse(string_field(j, "lo")), Rational::parse(string_field(j, "hi")));
}

Json spec_to_json(const TwoNormSpec& spec) {
  Json j = Json::object();
  switch (spec.kind()) {
    case NormKind::Cross3:
      j["kind"] = "cross3";
      break;
    case NormKind::Cross3P:
      j["kind"] = "cross3p";
      j["p"] = spec.p().str();
      break;
    case NormKind::Scaled:
      j["kind"] = "scaled";
      j["c"] = spec.scale_c().str();
      j["base"] = spec_to_json(spec.base());
      break;
    case NormKind::Affine:
      j["kind"] = "affine";
      j["a"] = spec.affine_a().str();
      j["b"] = spec.affine_b().str();
      j["base"] = spec_to_json(spec.base());
      break;
    case NormKind::Mutant:
      j["kind"] = "mutant";
      j["tag"] = spec.mutant_tag();
      break;
  }
  j["dim"] = spec.dim();
  j["certified_K"] = spec.certified_k().str();
  return j;
}

TwoNormSpec spec_from_json(const Json& j) {
  std::string kind = string_field(j, "kind");
  if (j.contains("dim")) {
    const Json& d = j.at("dim");
    if (!d.is_number_integer() || d.get<int>() != 3) {
      throw ParameterError("only dimension 3 is supported");
    }
  }
  if (kind == "cross3") return TwoNormSpec::cross3();
  if (kind == "cross3p") return TwoNormSpec::cross3p(Rational::parse(string_field(j, "p")));
  if (kind == "scaled") {
    return TwoNormSpec::scaled(Rational::parse(string_field(j, "c")),
                               spec_from_json(field(j, "base")));
  }
  if (kind == "affine") {
    return TwoNormSpec::affine(Rational::parse(string_field(j, "a")),
                               Rational::parse(string_field(j, "b")),
                               spec_from_json(field(j, "base")));
  }
  if (kind == "mutant") return TwoNormSpec::mutant(string_field(j, "tag"));
  throw ParseError("unknown norm kind '" + kind + "'");
}

Json seq_to_json(const SeqSpec& s) {
  if (!s.serializable()) {
    throw DomainError("sequence kind '" + s.kind_name() + "' has no wire form");
  }
  detail::WireForm w = s.node().wire_form();
  Json j = Json::object();
  j["kind"] = w.kind;

  auto scalar = [&w](const char* name) -> const std::string* {
    for (const auto& [n, v] : w.scalars)
      if (n == name) return &v;
    return nullptr;
  };
  auto vector = [&w](const char* name) -> const VectorQ* {
    for (const auto& [n, v] : w.vectors)
      if (n == name) return &v;
    return nullptr;
  };
  auto child = [&w](const char* name) -> const SeqSpec* {
    for (const auto& [n, v] : w.children)
      if (n == name) return &v;
    return nullptr;
  };

  // Canonical field order per kind; extraneous params would be a node bug.
  if (w.kind == "const") {
    j["x"] = vector_to_json(*vector("x"));
  } else if (w.kind == "geometric") {
    j["x"] = vector_to_json(*vector("x"));
    j["d"] = vector_to_json(*vector("d"));
    j["r"] = *scalar("r");
  } else if (w.kind == "newton_sqrt") {
    j["k"] = *scalar("k");
    j["dir"] = vector_to_json(*vector("dir"));
    j["x0"] = *scalar("x0");
  } else if (w.kind == "sum" || w.kind == "diff") {
    j["s"] = seq_to_json(*child("s"));
    j["t"] = seq_to_json(*child("t"));
    j["quasi_K"] = *scalar("quasi_K");
  } else if (w.kind == "scale") {
    j["alpha"] = *scalar("alpha");
    j["s"] = seq_to_json(*child("s"));
  } else {
    throw DomainError("internal: unhandled sequence kind '" + w.kind + "'");
  }
  return j;
}

SeqSpec seq_from_json(const Json& j) {
  std::string kind = string_field(j, "kind");
  if (kind == "const") return SeqSpec::constant(vector_from_json(field(j, "x")));
  if (kind == "geometric") {
    return SeqSpec::geometric(vector_from_json(field(j, "x")), vector_from_json(field(j, "d")),
                              Rational::parse(string_field(j, "r")));
  }
  if (kind == "newton_sqrt") {
    return SeqSpec::newton_sqrt(Rational::parse(string_field(j, "k")),
                                vector_from_json(field(j, "dir")),
                                Rational::parse(string_field(j, "x0")));
  }
  if (kind == "sum" || kind == "diff") {
    Rational k(1);
    if (j.contains("quasi_K")) k = Rational::parse(string_field(j, "quasi_K"));
    SeqSpec s = seq_from_json(field(j, "s"));
    SeqSpec t = seq_from_json(field(j, "t"));
    return kind == "sum" ? SeqSpec::sum(std::move(s), std::move(t), k)
                         : SeqSpec::diff(std::move(s), std::move(t), k);
  }
  if (kind == "scale") {
    return SeqSpec::scale(Rational::parse(string_field(j, "alpha")),
                          seq_from_json(field(j, "s")));
  }
  throw ParseError("unknown sequence kind '" + kind + "'");
}

Json elem_to_json(const CompletionElem& e) {
  Json j = Json::object();
  j["space"] = spec_to_json(e.space());
  j["rep"] = seq_to_json(e.rep());
  return j;
}

CompletionElem elem_from_json(const Json& j) {
  return CompletionElem(spec_from_json(field(j, "space")), seq_from_json(field(j, "rep")));
}

Json verdict_to_json(const EquivVerdict& v) {
  Json j = Json::object();
  j["status"] = v.status_name();
  switch (v.status()) {
    case EquivVerdict::Status::Equivalent:
      j["budget"] = v.certificate().budget;
      if (v.certificate().difference.serializable()) {
        j["difference"] = seq_to_json(v.certificate().difference);
      }
      break;
    case EquivVerdict::Status::Distinct:
      j["index"] = v.witness().index;
      j["z"] = vector_to_json(v.witness().z);
      j["separation"] = v.witness().separation.str();
      break;
    case EquivVerdict::Status::Unknown: {
      j["budget"] = v.diagnostics().budget;
      Json encs = Json::array();
      for (const auto& [z, enc] : v.diagnostics().final_enclosures) {
        Json e = Json::object();
        e["z"] = vector_to_json(z);
        e["enclosure"] = interval_to_json(enc);
        encs.push_back(std::move(e));
      }
      j["final_enclosures"] = std::move(encs);
      break;
    }
  }
  return j;
}

Json witness_to_json(const AxiomWitness& w) {
  Json j = Json::object();
  j["axiom"] = w.axiom;
  j["trial"] = w.trial;
  if (w.x) j["x"] = vector_to_json(*w.x);
  if (w.y) j["y"] = vector_to_json(*w.y);
  if (w.z) j["z"] = vector_to_json(*w.z);
  if (w.alpha) j["alpha"] = w.alpha->str();
  Json obs = Json::object();
  for (const auto& [key, value] : w.observed) obs[key] = value;
  j["observed"] = std::move(obs);
  return j;
}

Json report_to_json(const AxiomReport& rep, const TwoNormSpec& spec) {
  auto status_str = [](AxiomStatus s) { return s == AxiomStatus::Pass ? "pass" : "fail"; };
  Json axioms = Json::object();
  axioms["2N1"] = Json{{"status", status_str(rep.n1)}};
  axioms["2N2"] = Json{{"status", status_str(rep.n2)}};
  axioms["2N3"] = Json{{"status", status_str(rep.n3)}};
  axioms["2N4star"] = Json{{"status", status_str(rep.n4star)}};

  Json j = Json::object();
  j["axioms"] = std::move(axioms);
  Json ws = Json::array();
  for (const auto& w : rep.witnesses) ws.push_back(witness_to_json(w));
  j["witnesses"] = std::move(ws);
  j["estimated_K"] = rep.estimated_k.str();
  j["certified_K"] = rep.certified_k.str();
  j["seed"] = rep.seed;
  j["trials"] = rep.trials;
  j["eps"] = rep.eps.str();
  if (rep.claimed_k) j["claimed_K"] = rep.claimed_k->str();
  j["spec"] = spec_to_json(spec);
  j["spec_hash"] = spec_hash(spec);
  return j;
}

std::string spec_hash(const TwoNormSpec& spec) {
  std::string dump = spec_to_json(spec).dump();
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : dump) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  std::ostringstream os;
  os << "0x" << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

VectorQ vector_from_csv(const std::string& text) {
  std::vector<Rational> comps;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) comps.push_back(Rational::parse(token));
  if (comps.empty()) throw ParseError("empty vector literal");
  return VectorQ(std::move(comps));
}

}  // namespace q2n
