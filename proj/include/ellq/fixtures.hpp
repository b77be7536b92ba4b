#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "ellq/fixture_data.hpp"
#include "exactq.hpp"

namespace ellq {

struct Fixture {
  std::string id;
  std::string provenance; // published, standard or derived
  std::string source;
  nlohmann::json payload;
};

inline Fixture fixtureFromJson(const std::string& id, const nlohmann::json& j)
{
  Fixture f;
  f.id = j.value("id", id);
  if (f.id != id) throw std::invalid_argument("fixture id mismatch: " + id);
  f.provenance = j.at("provenance").get<std::string>();
  if (f.provenance != "published" && f.provenance != "standard" && f.provenance != "derived")
    throw std::invalid_argument("fixture " + id + ": bad provenance " + f.provenance);
  f.source = j.at("source").get<std::string>();
  f.payload = j.at("payload");
  return f;
}

// Compiled-in fixtures, optionally overridden file by file from a directory.
class FixtureRegistry {
public:
  static FixtureRegistry& instance()
  {
    static FixtureRegistry r;
    return r;
  }

  void setDirectory(const std::filesystem::path& dir)
  {
    if (!std::filesystem::is_directory(dir)) throw std::invalid_argument("not a fixture directory: " + dir.string());
    std::lock_guard<std::mutex> lock(mu_);
    dir_ = dir;
    cache_.clear();
  }

  const Fixture& get(const std::string& id)
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(id);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(id, load(id)).first->second;
  }

  std::vector<std::string> ids() const
  {
    std::vector<std::string> r;
    for (const auto& [id, text] : detail::embeddedFixtures()) r.push_back(id);
    return r;
  }

private:
  Fixture load(const std::string& id) const
  {
    if (!dir_.empty()) {
      auto p = dir_ / (id + ".json");
      if (std::filesystem::exists(p)) {
        std::ifstream in(p);
        return fixtureFromJson(id, nlohmann::json::parse(in));
      }
    }
    for (const auto& [fid, text] : detail::embeddedFixtures())
      if (fid == id) return fixtureFromJson(id, nlohmann::json::parse(text));
    throw std::out_of_range("missing fixture: " + id);
  }

  std::mutex mu_;
  std::filesystem::path dir_;
  std::map<std::string, Fixture> cache_;
};

inline const Fixture& fixture(const std::string& id) { return FixtureRegistry::instance().get(id); }

// {"scalar", "qpow", "num": {n: mult}, "den": {n: mult}} or the string "0".
inline RationalFunction factoredFromJson(const nlohmann::json& j)
{
  if (j.is_string() || j.is_number()) return RationalFunction(rationalFromJson(j));
  auto phis = [](const nlohmann::json& m) {
    QPolynomial p(1);
    for (auto it = m.begin(); it != m.end(); ++it) p *= cyclotomic(std::stoi(it.key())).pow(it.value().get<int>());
    return p;
  };
  QPolynomial num = rationalFromJson(j.at("scalar")) * QPolynomial::monomial(j.value("qpow", 0));
  if (j.contains("num")) num *= phis(j["num"]);
  if (j.contains("phi")) num *= phis(j["phi"]);
  if (j.contains("poly")) {
    std::vector<long> c = j["poly"].get<std::vector<long>>();
    num *= QPolynomial::fromInts(c);
  }
  QPolynomial den = j.contains("den") ? phis(j["den"]) : QPolynomial(1);
  return RationalFunction(num, den);
}

} // namespace ellq
