#pragma once

#include <fstream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "holderlab/fractal_cube.hpp"
#include "holderlab/rational.hpp"
#include "holderlab/scale_factor.hpp"

namespace holderlab {

namespace detail {

inline nlohmann::json bigint_to_json(const BigInt& v) {
    if (v.fits_int64()) return v.to_int64();
    return v.to_string();
}

inline BigInt bigint_from_json(const nlohmann::json& j, const char* what) {
    if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
    if (j.is_string()) return BigInt::from_string(j.get<std::string>());
    throw std::invalid_argument(std::string("manifest: ") + what + " must be an integer or string");
}

inline Rational rational_from_json(const nlohmann::json& j, const char* what) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw std::invalid_argument(std::string("manifest: ") + what +
                                    " must be an object with num and den");
    return Rational(bigint_from_json(j.at("num"), what), bigint_from_json(j.at("den"), what));
}

inline nlohmann::json rational_to_json(const Rational& r) {
    return {{"num", bigint_to_json(r.num())}, {"den", bigint_to_json(r.den())}};
}

}  // namespace detail

// One named instance: a fractal cube or an abstract self-similar class
// given by its contraction-ratio vector. Self-similar instances promise the
// strong separation condition; the tool cannot check that promise.
struct ManifestInstance {
    enum class Kind { fractal_cube, self_similar };

    Kind kind;
    std::string id;
    std::optional<FractalCube> cube;
    std::vector<ScaleFactor> ratios;
};

class InstanceManifest {
public:
    static InstanceManifest from_json(const nlohmann::json& doc) {
        InstanceManifest m;
        if (doc.contains("bases")) {
            if (!doc.at("bases").is_object())
                throw std::invalid_argument("manifest: bases must be an object");
            for (const auto& [name, value] : doc.at("bases").items()) {
                if (value.is_null())
                    m.bases_[name] = std::nullopt;
                else
                    m.bases_[name] = detail::rational_from_json(value, "base value");
            }
        }
        if (!doc.contains("instances") || !doc.at("instances").is_array())
            throw std::invalid_argument("manifest: instances array is required");
        for (const auto& inst : doc.at("instances")) {
            ManifestInstance out;
            out.id = inst.value("id", std::string{});
            if (out.id.empty()) throw std::invalid_argument("manifest: instance without id");
            if (m.index_.count(out.id))
                throw std::invalid_argument("manifest: duplicate id \"" + out.id + "\"");
            std::string kind = inst.value("kind", std::string{});
            if (kind == "fractal_cube") {
                out.kind = ManifestInstance::Kind::fractal_cube;
                std::vector<Cell> digits;
                for (const auto& dj : inst.at("digits")) {
                    Cell cell;
                    for (const auto& c : dj) cell.push_back(c.get<std::int64_t>());
                    digits.push_back(std::move(cell));
                }
                out.cube = FractalCube::make(inst.at("n").get<std::int64_t>(),
                                             inst.at("d").get<std::int64_t>(), std::move(digits));
            } else if (kind == "self_similar") {
                out.kind = ManifestInstance::Kind::self_similar;
                for (const auto& rj : inst.at("ratios")) out.ratios.push_back(m.parse_ratio(rj));
                if (out.ratios.size() < 2)
                    throw std::invalid_argument("manifest: self_similar instance \"" + out.id +
                                                "\" needs at least two ratios");
            } else {
                throw std::invalid_argument("manifest: unknown instance kind \"" + kind + "\"");
            }
            m.index_[out.id] = m.instances_.size();
            m.instances_.push_back(std::move(out));
        }
        return m;
    }

    static InstanceManifest load(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("manifest: cannot open " + path);
        nlohmann::json doc = nlohmann::json::parse(in);
        return from_json(doc);
    }

    nlohmann::json to_json() const {
        nlohmann::json doc;
        if (!bases_.empty()) {
            nlohmann::json bases = nlohmann::json::object();
            for (const auto& [name, value] : bases_)
                bases[name] = value ? detail::rational_to_json(*value) : nlohmann::json(nullptr);
            doc["bases"] = std::move(bases);
        }
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& inst : instances_) {
            nlohmann::json j;
            j["id"] = inst.id;
            if (inst.kind == ManifestInstance::Kind::fractal_cube) {
                j["kind"] = "fractal_cube";
                j["n"] = inst.cube->n();
                j["d"] = inst.cube->d();
                nlohmann::json digits = nlohmann::json::array();
                for (const auto& cell : inst.cube->digits()) digits.push_back(cell);
                j["digits"] = std::move(digits);
            } else {
                j["kind"] = "self_similar";
                nlohmann::json ratios = nlohmann::json::array();
                for (const auto& r : inst.ratios) {
                    nlohmann::json rj;
                    if (r.is_rational_form()) {
                        rj["kind"] = "rational";
                        rj["num"] = detail::bigint_to_json(r.rational_value().num());
                        rj["den"] = detail::bigint_to_json(r.rational_value().den());
                    } else {
                        rj["kind"] = "power";
                        rj["base"] = r.base_name();
                        rj["num"] = detail::bigint_to_json(r.exponent().num());
                        rj["den"] = detail::bigint_to_json(r.exponent().den());
                    }
                    ratios.push_back(std::move(rj));
                }
                j["ratios"] = std::move(ratios);
            }
            arr.push_back(std::move(j));
        }
        doc["instances"] = std::move(arr);
        return doc;
    }

    const std::map<std::string, std::optional<Rational>>& bases() const { return bases_; }
    const std::vector<ManifestInstance>& instances() const { return instances_; }

    const ManifestInstance& find(const std::string& id) const {
        auto it = index_.find(id);
        if (it == index_.end())
            throw std::invalid_argument("manifest: no instance with id \"" + id + "\"");
        return instances_[it->second];
    }

private:
    std::map<std::string, std::optional<Rational>> bases_;
    std::vector<ManifestInstance> instances_;
    std::map<std::string, std::size_t> index_;

    ScaleFactor parse_ratio(const nlohmann::json& rj) const {
        std::string kind = rj.value("kind", std::string{});
        if (kind == "rational")
            return ScaleFactor::rational(detail::rational_from_json(rj, "ratio"));
        if (kind == "power") {
            std::string base = rj.value("base", std::string{});
            auto it = bases_.find(base);
            if (it == bases_.end())
                throw std::invalid_argument("manifest: ratio references undeclared base \"" +
                                            base + "\"");
            return ScaleFactor::base_power(base, detail::rational_from_json(rj, "exponent"),
                                           it->second);
        }
        throw std::invalid_argument("manifest: ratio kind must be rational or power");
    }
};

}  // namespace holderlab
