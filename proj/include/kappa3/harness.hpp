#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "kappa3/enumerate.hpp"
#include "kappa3/families.hpp"
#include "kappa3/graph.hpp"

namespace kappa3 {

struct VerificationReport {
    std::string claim_id;
    bool pass = false;
    long scanned = 0;
    long satisfied = 0;
    std::optional<int> f_value;
    std::vector<std::string> members;         // canonical graph6
    std::vector<nlohmann::json> witnesses;    // failures / notable members
    double elapsed_ms = 0.0;

    nlohmann::json to_json(bool include_elapsed = false) const;
};

// Persistent memo of kappa_bar_3 values keyed by canonical graph6.
// File format: one "<key>\t<value>" per line, sorted on flush.
class KappaCache {
public:
    std::optional<int> get(const CanonicalKey& key) const;
    void put(const CanonicalKey& key, int value);  // conflicting re-put throws
    void load(const std::string& path);
    void flush(const std::string& path) const;
    std::size_t size() const;
    std::vector<std::pair<CanonicalKey, int>> entries() const;

private:
    mutable std::mutex mu_;
    std::map<CanonicalKey, int> map_;
};

nlohmann::json catalog_json(const ExtremalCatalog& cat);
ExtremalCatalog catalog_from_json(const nlohmann::json& j);

// Reproduction suite for the lemma/theorem-level claims. One Harness owns
// the enumeration levels and (optionally) a kappa cache.
class Harness {
public:
    explicit Harness(int threads = 0, KappaCache* cache = nullptr)
        : threads_(threads), cache_(cache) {}

    VerificationReport verify_lemma3();
    VerificationReport verify_lemma4();
    VerificationReport verify_lemma5();
    VerificationReport verify_lemma6();
    VerificationReport verify_theorem(int n);
    VerificationReport verify_inductive_lemmas(int n);  // n in {7, 8}
    VerificationReport verify_observations();
    VerificationReport verify_remark(int max_n, int max_ell);
    std::vector<VerificationReport> verify_all(int max_theorem_n = 8);

    Enumerator& enumerator() { return enum_; }
    ExtremalCatalog catalog(int n);

private:
    bool bar3_at_least3(const Graph& g);
    VerificationReport scan_size_class(const std::string& claim, int n, int m, bool expect_high);

    Enumerator enum_;
    int threads_;
    KappaCache* cache_;
    std::map<int, ExtremalCatalog> catalogs_;
};

}  // namespace kappa3
