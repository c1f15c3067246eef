#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "uiprune/common.hpp"
#include "uiprune/csv.hpp"
#include "uiprune/linker.hpp"
#include "uiprune/textprep.hpp"

namespace uiprune {

struct HDPParams {
  double gamma = 1.0;
  double alpha0 = 1.0;
  double eta = 0.5;
  int iterations = 1000;
  int burn_in = 500;
  std::uint64_t seed = 0;

  void validate() const {
    if (!(gamma > 0) || !(alpha0 > 0) || !(eta > 0)) throw InputError("HDP gamma, alpha0 and eta must be positive");
    if (iterations < 1) throw InputError("HDP iterations must be at least 1");
    if (burn_in < 0 || burn_in >= iterations) throw InputError("HDP burn_in must lie in [0, iterations)");
  }
};

struct TopicDistribution {
  std::string review_id;
  std::vector<double> probabilities;  // indexed by topic id
};

/// (n_t + alpha0 * beta_t) / (n + alpha0), renormalized against rounding.
inline std::vector<double> smoothed_theta(const std::vector<int>& counts, double alpha0, const std::vector<double>& beta) {
  double n = 0;
  for (int c : counts) n += c;
  std::vector<double> th(counts.size());
  double sum = 0;
  for (std::size_t t = 0; t < counts.size(); ++t) {
    th[t] = (counts[t] + alpha0 * beta[t]) / (n + alpha0);
    sum += th[t];
  }
  for (auto& v : th) v /= sum;
  return th;
}

/// Hierarchical Dirichlet process topic model fitted with collapsed Gibbs
/// sampling in the Chinese restaurant franchise representation.
class HDPModel {
 public:
  using Observer = std::function<void(const HDPModel&, int sweep)>;

  static HDPModel fit(const std::vector<TokenizedText>& docs, const HDPParams& params, const Observer& observer = {}) {
    params.validate();
    if (docs.empty()) throw InputError("cannot fit a topic model to zero documents");
    HDPModel m;
    m.params_ = params;
    m.rng_ = Rng(params.seed);
    m.index_documents(docs);
    if (m.total_words_ == 0) throw InputError("cannot fit a topic model: every document is empty");
    m.initialize();
    for (int it = 0; it < params.iterations; ++it) {
      m.sweep();
      if (it >= params.burn_in) m.ll_trace_.push_back(m.log_likelihood());
      if (observer) observer(m, it);
    }
    return m;
  }

  std::size_t num_docs() const { return words_.size(); }
  std::size_t vocab_size() const { return vocab_.size(); }
  std::size_t total_words() const { return total_words_; }
  const HDPParams& params() const { return params_; }

  /// Live topics, numbered 0..K-1 in order of internal slot.
  std::size_t num_topics() const { return live_topics().size(); }

  /// Global topic weights beta_k = m_k / m over live topics.
  std::vector<double> beta() const {
    auto live = live_topics();
    std::vector<double> b;
    double m = 0;
    for (int k : live) m += mk_[k];
    for (int k : live) b.push_back(mk_[k] / m);
    return b;
  }

  /// Token counts per live topic for one document.
  std::vector<int> doc_topic_counts(std::size_t doc) const {
    auto live = live_topics();
    std::vector<int> slot_to_id(mk_.size(), -1);
    for (std::size_t i = 0; i < live.size(); ++i) slot_to_id[live[i]] = static_cast<int>(i);
    std::vector<int> c(live.size(), 0);
    const auto& tc = table_count_[doc];
    const auto& td = table_dish_[doc];
    for (std::size_t t = 0; t < tc.size(); ++t)
      if (tc[t] > 0) c[slot_to_id[td[t]]] += tc[t];
    return c;
  }

  std::vector<double> theta(std::size_t doc) const {
    return smoothed_theta(doc_topic_counts(doc), params_.alpha0, beta());
  }

  TopicDistribution theta(const std::string& review_id) const {
    auto it = doc_index_.find(review_id);
    if (it == doc_index_.end()) throw InputError("review '" + review_id + "' is not in the fitted corpus");
    return {review_id, theta(it->second)};
  }

  bool has_review(const std::string& review_id) const { return doc_index_.count(review_id) > 0; }
  const std::vector<std::string>& review_ids() const { return ids_; }

  /// Checks that every cached count matches a recount from assignments.
  bool consistent() const {
    std::vector<std::vector<int>> nkw(mk_.size(), std::vector<int>(vocab_.size(), 0));
    std::vector<int> nk(mk_.size(), 0), mk(mk_.size(), 0);
    std::size_t words = 0;
    for (std::size_t j = 0; j < words_.size(); ++j) {
      std::vector<int> tc(table_count_[j].size(), 0);
      for (std::size_t i = 0; i < words_[j].size(); ++i) {
        int t = word_table_[j][i];
        ++tc[t];
        int k = table_dish_[j][t];
        if (k < 0) return false;
        ++nkw[k][words_[j][i]];
        ++nk[k];
        ++words;
      }
      if (tc != table_count_[j]) return false;
      for (std::size_t t = 0; t < tc.size(); ++t)
        if (tc[t] > 0) ++mk[table_dish_[j][t]];
    }
    long total_nk = 0;
    for (int v : nk) total_nk += v;
    return nkw == nkw_ && nk == nk_ && mk == mk_ && words == total_words_ &&
           total_nk == static_cast<long>(total_words_);
  }

  const std::vector<double>& log_likelihood_trace() const { return ll_trace_; }

  /// Full sampler state as text; equal dumps mean equal models.
  std::string dump() const {
    std::string out = "hdp-state 1\n";
    out += "gamma " + format_double(params_.gamma) + " alpha0 " + format_double(params_.alpha0) + " eta " +
           format_double(params_.eta) + " iterations " + std::to_string(params_.iterations) + " burn_in " +
           std::to_string(params_.burn_in) + " seed " + std::to_string(params_.seed) + "\n";
    out += "topics " + std::to_string(num_topics()) + "\n";
    auto live = live_topics();
    std::vector<int> slot_to_id(mk_.size(), -1);
    for (std::size_t i = 0; i < live.size(); ++i) slot_to_id[live[i]] = static_cast<int>(i);
    for (std::size_t j = 0; j < words_.size(); ++j) {
      out += ids_[j];
      for (std::size_t i = 0; i < words_[j].size(); ++i) {
        int t = word_table_[j][i];
        out += " " + vocab_[words_[j][i]] + ":" + std::to_string(t) + ":" + std::to_string(slot_to_id[table_dish_[j][t]]);
      }
      out += "\n";
    }
    return out;
  }

  /// Top words of a live topic by count, ties broken alphabetically.
  std::vector<std::string> top_words(std::size_t topic, std::size_t n) const {
    int k = live_topics().at(topic);
    std::vector<std::pair<int, std::string>> ws;
    for (std::size_t w = 0; w < vocab_.size(); ++w)
      if (nkw_[k][w] > 0) ws.emplace_back(-nkw_[k][w], vocab_[w]);
    std::sort(ws.begin(), ws.end());
    std::vector<std::string> out;
    for (std::size_t i = 0; i < ws.size() && i < n; ++i) out.push_back(ws[i].second);
    return out;
  }

 private:
  std::vector<int> live_topics() const {
    std::vector<int> live;
    for (std::size_t k = 0; k < mk_.size(); ++k)
      if (mk_[k] > 0) live.push_back(static_cast<int>(k));
    return live;
  }

  void index_documents(const std::vector<TokenizedText>& docs) {
    std::set<std::string> vocab;
    for (const auto& d : docs) vocab.insert(d.tokens.begin(), d.tokens.end());
    vocab_.assign(vocab.begin(), vocab.end());
    std::unordered_map<std::string, int> wid;
    for (std::size_t i = 0; i < vocab_.size(); ++i) wid[vocab_[i]] = static_cast<int>(i);
    for (std::size_t j = 0; j < docs.size(); ++j) {
      if (!doc_index_.emplace(docs[j].source_id, j).second)
        throw InputError("duplicate review id '" + docs[j].source_id + "' in topic corpus");
      ids_.push_back(docs[j].source_id);
      std::vector<int> w;
      for (const auto& t : docs[j].tokens) w.push_back(wid[t]);
      total_words_ += w.size();
      words_.push_back(std::move(w));
    }
    word_table_.resize(docs.size());
    table_count_.resize(docs.size());
    table_dish_.resize(docs.size());
  }

  double vb() const { return static_cast<double>(vocab_.size()) * params_.eta; }

  double f(int k, int w) const { return (nkw_[k][w] + params_.eta) / (nk_[k] + vb()); }

  int new_topic_slot() {
    for (std::size_t k = 0; k < mk_.size(); ++k)
      if (mk_[k] == 0) return static_cast<int>(k);
    mk_.push_back(0);
    nk_.push_back(0);
    nkw_.emplace_back(vocab_.size(), 0);
    return static_cast<int>(mk_.size() - 1);
  }

  int new_table_slot(std::size_t j) {
    auto& tc = table_count_[j];
    for (std::size_t t = 0; t < tc.size(); ++t)
      if (tc[t] == 0) return static_cast<int>(t);
    tc.push_back(0);
    table_dish_[j].push_back(-1);
    return static_cast<int>(tc.size() - 1);
  }

  // Seats word i of document j given all other assignments.
  void seat(std::size_t j, std::size_t i) {
    const int w = words_[j][i];
    const double fnew = 1.0 / static_cast<double>(vocab_.size());
    auto live = live_topics();
    double m = 0;
    for (int k : live) m += mk_[k];

    double p_new = params_.gamma * fnew;
    for (int k : live) p_new += mk_[k] * f(k, w);
    p_new /= (m + params_.gamma);

    auto& tc = table_count_[j];
    auto& td = table_dish_[j];
    std::vector<int> tables;
    std::vector<double> weights;
    for (std::size_t t = 0; t < tc.size(); ++t) {
      if (tc[t] == 0) continue;
      tables.push_back(static_cast<int>(t));
      weights.push_back(tc[t] * f(td[t], w));
    }
    weights.push_back(params_.alpha0 * p_new);
    auto pick = sample_discrete(weights, rng_);

    int t;
    if (pick < tables.size()) {
      t = tables[pick];
    } else {
      std::vector<double> dw;
      for (int k : live) dw.push_back(mk_[k] * f(k, w));
      dw.push_back(params_.gamma * fnew);
      auto d = sample_discrete(dw, rng_);
      int k = d < live.size() ? live[d] : new_topic_slot();
      t = new_table_slot(j);
      td[t] = k;
      ++mk_[k];
    }
    word_table_[j][i] = t;
    ++tc[t];
    int k = td[t];
    ++nkw_[k][w];
    ++nk_[k];
  }

  void unseat(std::size_t j, std::size_t i) {
    const int w = words_[j][i];
    int t = word_table_[j][i];
    int k = table_dish_[j][t];
    --nkw_[k][w];
    --nk_[k];
    if (--table_count_[j][t] == 0) {
      --mk_[k];
      table_dish_[j][t] = -1;
    }
  }

  void resample_dish(std::size_t j, int t) {
    std::map<int, int> cw;  // word -> count at this table
    for (std::size_t i = 0; i < words_[j].size(); ++i)
      if (word_table_[j][i] == t) ++cw[words_[j][i]];
    const int n = table_count_[j][t];
    const int old = table_dish_[j][t];
    for (auto [w, c] : cw) nkw_[old][w] -= c;
    nk_[old] -= n;
    --mk_[old];

    auto live = live_topics();
    std::vector<double> logw;
    for (int k : live) {
      double lw = std::log(static_cast<double>(mk_[k])) + std::lgamma(nk_[k] + vb()) - std::lgamma(nk_[k] + n + vb());
      for (auto [w, c] : cw) lw += std::lgamma(nkw_[k][w] + c + params_.eta) - std::lgamma(nkw_[k][w] + params_.eta);
      logw.push_back(lw);
    }
    {
      double lw = std::log(params_.gamma) + std::lgamma(vb()) - std::lgamma(n + vb());
      for (auto [w, c] : cw) lw += std::lgamma(c + params_.eta) - std::lgamma(params_.eta);
      logw.push_back(lw);
    }
    double mx = *std::max_element(logw.begin(), logw.end());
    std::vector<double> weights;
    for (double lw : logw) weights.push_back(std::exp(lw - mx));
    auto d = sample_discrete(weights, rng_);
    int k = d < live.size() ? live[d] : new_topic_slot();

    table_dish_[j][t] = k;
    for (auto [w, c] : cw) nkw_[k][w] += c;
    nk_[k] += n;
    ++mk_[k];
  }

  void initialize() {
    for (std::size_t j = 0; j < words_.size(); ++j) {
      word_table_[j].assign(words_[j].size(), -1);
      for (std::size_t i = 0; i < words_[j].size(); ++i) seat(j, i);
    }
  }

  void sweep() {
    for (std::size_t j = 0; j < words_.size(); ++j)
      for (std::size_t i = 0; i < words_[j].size(); ++i) {
        unseat(j, i);
        seat(j, i);
      }
    for (std::size_t j = 0; j < words_.size(); ++j)
      for (std::size_t t = 0; t < table_count_[j].size(); ++t)
        if (table_count_[j][t] > 0) resample_dish(j, static_cast<int>(t));
  }

  // log p(words | topic assignments), topics integrated out.
  double log_likelihood() const {
    double ll = 0;
    for (std::size_t k = 0; k < mk_.size(); ++k) {
      if (mk_[k] == 0) continue;
      ll += std::lgamma(vb()) - std::lgamma(nk_[k] + vb());
      for (int c : nkw_[k])
        if (c > 0) ll += std::lgamma(c + params_.eta) - std::lgamma(params_.eta);
    }
    return ll;
  }

  HDPParams params_;
  Rng rng_{0};
  std::vector<std::string> vocab_;
  std::vector<std::string> ids_;
  std::unordered_map<std::string, std::size_t> doc_index_;
  std::vector<std::vector<int>> words_;
  std::size_t total_words_ = 0;

  std::vector<std::vector<int>> word_table_;   // [doc][word] -> table
  std::vector<std::vector<int>> table_count_;  // [doc][table] -> customers
  std::vector<std::vector<int>> table_dish_;   // [doc][table] -> topic slot, -1 if empty
  std::vector<std::vector<int>> nkw_;          // [topic][word]
  std::vector<int> nk_;                        // words per topic
  std::vector<int> mk_;                        // tables per topic
  std::vector<double> ll_trace_;
};

inline HDPModel fit_hdp(const std::vector<TokenizedText>& docs, const HDPParams& params) {
  return HDPModel::fit(docs, params);
}

struct Cluster {
  std::string cluster_id;
  std::string element_id;
  int release_ordinal = 0;
  int topic_id = 0;
  std::vector<std::string> review_ids;

  bool operator==(const Cluster&) const = default;
};

inline std::string cluster_key(const std::string& element_id, int release, int topic) {
  return element_id + "/" + std::to_string(release) + "/" + std::to_string(topic);
}

/// Groups the reviews linked to `element_id` in `release_ordinal` by topic.
/// A review joins every topic with theta >= tau_topic and always joins its
/// argmax topic, so clusters can overlap. `theta_of(review_id)` returns the
/// review's topic distribution.
template <typename ThetaOf>
  requires std::invocable<ThetaOf&, const std::string&>
std::vector<Cluster> form_clusters(ThetaOf&& theta_of, const std::vector<ReviewLink>& links,
                                   const std::string& element_id, int release_ordinal, double tau_topic = 0.25) {
  std::map<int, std::vector<std::string>> members;
  std::set<std::string> done;
  for (const auto& l : links) {
    if (l.element_id != element_id || l.release_ordinal != release_ordinal) continue;
    if (!done.insert(l.review_id).second) continue;
    const std::vector<double> th = theta_of(l.review_id);
    auto best = static_cast<int>(std::max_element(th.begin(), th.end()) - th.begin());
    for (std::size_t t = 0; t < th.size(); ++t)
      if (th[t] >= tau_topic || static_cast<int>(t) == best) members[static_cast<int>(t)].push_back(l.review_id);
  }
  std::vector<Cluster> out;
  for (auto& [t, ids] : members)
    out.push_back({cluster_key(element_id, release_ordinal, t), element_id, release_ordinal, t, std::move(ids)});
  return out;
}

/// `model` must have been fitted on exactly the reviews linked to
/// `element_id` in `release_ordinal`.
inline std::vector<Cluster> form_clusters(const HDPModel& model, const std::vector<ReviewLink>& links,
                                          const std::string& element_id, int release_ordinal,
                                          double tau_topic = 0.25) {
  return form_clusters([&](const std::string& id) { return model.theta(id).probabilities; }, links, element_id,
                       release_ordinal, tau_topic);
}

inline std::string clusters_csv(const std::vector<Cluster>& clusters) {
  std::string out = csv::format_row({"cluster_id", "element_id", "release_ordinal", "topic_id", "review_id"});
  for (const auto& c : clusters)
    for (const auto& r : c.review_ids)
      out += csv::format_row({c.cluster_id, c.element_id, std::to_string(c.release_ordinal), std::to_string(c.topic_id), r});
  return out;
}

}  // namespace uiprune
