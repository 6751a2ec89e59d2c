#include "maxcontract/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace maxcontract {

namespace {

using nlohmann::json; // std::map-backed: keys serialize sorted

[[noreturn]] void bad(const std::string& what) {
  throw std::runtime_error("algebra JSON: " + what);
}

} // namespace

std::string to_json(const SuperAlgebra& alg) {
  json doc;
  doc["schema"] = 1;
  doc["name"] = alg.name;
  doc["complex"] = alg.isComplex;

  json gens = json::array();
  for (int t = 0; t < alg.dim(); ++t) {
    const GeneratorId& id = alg.gen(t);
    json g;
    g["family"] = family_name(id.family);
    g["indices"] = id.indices;
    g["grading"] = id.grading == Grading::Odd ? "odd" : "even";
    if (id.massdim) g["massdim"] = id.massdim->str();
    gens.push_back(std::move(g));
  }
  doc["generators"] = std::move(gens);

  json brackets = json::array();
  for (int i = 0; i < alg.dim(); ++i)
    for (int j = i; j < alg.dim(); ++j) {
      LinComb lc = alg.bracket_gens(i, j);
      if (lc.empty()) continue;
      json terms = json::array();
      for (const auto& [k, c] : lc)
        terms.push_back(json{{"coeff", c.str()}, {"k", k}});
      brackets.push_back(json{{"i", i}, {"j", j}, {"terms", std::move(terms)}});
    }
  doc["brackets"] = std::move(brackets);
  return doc.dump(2) + "\n";
}

SuperAlgebra from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    bad(e.what());
  }
  try {
    if (!doc.is_object()) bad("top level is not an object");
    if (doc.at("schema").get<long long>() != 1)
      bad("unsupported schema version " + doc.at("schema").dump());

    SuperAlgebra alg;
    alg.name = doc.at("name").get<std::string>();
    alg.isComplex = doc.at("complex").get<bool>();

    for (const json& g : doc.at("generators")) {
      const std::string famName = g.at("family").get<std::string>();
      std::optional<Family> fam = family_from_name(famName);
      if (!fam) bad("unknown generator family \"" + famName + "\"");
      std::optional<Rational> dim;
      if (g.contains("massdim"))
        dim = Rational::parse(g.at("massdim").get<std::string>());
      GeneratorId id(*fam, g.at("indices").get<std::vector<int>>(),
                     std::move(dim));
      const std::string grading = g.at("grading").get<std::string>();
      if (grading != (id.grading == Grading::Odd ? "odd" : "even"))
        bad("grading \"" + grading + "\" does not match family of " +
            id.str());
      alg.add_generator(std::move(id));
    }

    for (const json& b : doc.at("brackets")) {
      const int i = b.at("i").get<int>();
      const int j = b.at("j").get<int>();
      if (i < 0 || i >= alg.dim() || j < 0 || j >= alg.dim())
        bad("bracket indices (" + std::to_string(i) + ", " +
            std::to_string(j) + ") out of range");
      LinComb lc;
      for (const json& t : b.at("terms")) {
        const int k = t.at("k").get<int>();
        if (k < 0 || k >= alg.dim())
          bad("bracket term index " + std::to_string(k) + " out of range");
        lc_add_term(lc, k,
                    LaurentScalar::parse(t.at("coeff").get<std::string>()));
      }
      alg.set_bracket(i, j, lc);
    }
    return alg;
  } catch (const json::exception& e) {
    bad(e.what());
  } catch (const std::invalid_argument& e) {
    bad(e.what());
  }
}

void save_json(const SuperAlgebra& alg, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << to_json(alg);
  if (!out) throw std::runtime_error("write failed for " + path);
}

SuperAlgebra load_json(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_json(buf.str());
}

} // namespace maxcontract
