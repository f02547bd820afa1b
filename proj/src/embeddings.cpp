#include "rtk/embeddings.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "rtk/errors.hpp"

namespace rtk {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else
      cur.push_back(c);
  }
  out.push_back(trim(cur));
  return out;
}

std::uint64_t fnv1a64(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex16(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[static_cast<std::size_t>(i)] = digits[v & 0xf];
    v >>= 4;
  }
  return s;
}

EmbeddingFactor parse_factor(const std::string& tok, const std::vector<SimpleType>& M,
                             int line) {
  // W[a,b;c,d] or L[a,b;c,d]=m0
  EmbeddingFactor f;
  std::string t = trim(tok);
  if (t.empty() || (t[0] != 'W' && t[0] != 'L') || t.size() < 3 || t[1] != '[')
    throw parse_error("embeddings: line " + std::to_string(line) + ": bad factor '" + tok +
                      "'");
  f.weyl_level = t[0] == 'W';
  std::size_t close = t.find(']');
  if (close == std::string::npos)
    throw parse_error("embeddings: line " + std::to_string(line) + ": missing ']' in '" +
                      tok + "'");
  for (const std::string& block : split(t.substr(2, close - 2), ';')) {
    Weight w;
    for (const std::string& c : split(block, ',')) w.push_back(std::stoll(c));
    f.blocks.push_back(std::move(w));
  }
  if (f.blocks.size() != M.size())
    throw parse_error("embeddings: line " + std::to_string(line) +
                      ": factor has wrong number of blocks");
  for (std::size_t i = 0; i < M.size(); ++i)
    if (f.blocks[i].size() != static_cast<std::size_t>(M[i].rank))
      throw parse_error("embeddings: line " + std::to_string(line) +
                        ": block rank mismatch in '" + tok + "'");
  std::string rest = trim(t.substr(close + 1));
  if (!f.weyl_level) {
    if (rest.empty() || rest[0] != '=')
      throw parse_error("embeddings: line " + std::to_string(line) +
                        ": irreducible factor needs '=m0'");
    f.stated_m0 = Int(trim(rest.substr(1)));
  } else if (!rest.empty()) {
    throw parse_error("embeddings: line " + std::to_string(line) + ": trailing '" + rest +
                      "'");
  }
  return f;
}

std::string render_factor(const EmbeddingFactor& f) {
  std::string out = f.weyl_level ? "W[" : "L[";
  for (std::size_t b = 0; b < f.blocks.size(); ++b) {
    if (b) out += ";";
    for (std::size_t i = 0; i < f.blocks[b].size(); ++i) {
      if (i) out += ",";
      out += std::to_string(f.blocks[b][i]);
    }
  }
  out += "]";
  if (!f.weyl_level) out += "=" + f.stated_m0->str();
  return out;
}

EmbeddingDatum parse_emb(const std::string& body, int line) {
  auto fields = split(body, '|');
  if (fields.size() < 5)
    throw parse_error("embeddings: line " + std::to_string(line) + ": expected 5 fields");
  EmbeddingDatum e;
  e.line_no = line;
  e.H = parse_simple_type(fields[0]);
  for (const std::string& part : split(fields[1], '+')) e.M.push_back(parse_simple_type(part));
  e.p_cond = tables::parse_condition(fields[2]);
  if (fields[3] == "yes") e.expected_regular = true;
  else if (fields[3] == "no")
    e.expected_regular = false;
  else
    throw parse_error("embeddings: line " + std::to_string(line) + ": expected yes/no");
  std::istringstream fs(fields[4]);
  std::string tok;
  while (fs >> tok) e.factors.push_back(parse_factor(tok, e.M, line));
  if (e.factors.empty())
    throw parse_error("embeddings: line " + std::to_string(line) + ": no factors");
  for (std::size_t f = 5; f < fields.size(); ++f) {
    if (fields[f].rfind("note=", 0) == 0) e.note = trim(fields[f].substr(5));
    else
      throw parse_error("embeddings: line " + std::to_string(line) + ": bad field '" +
                        fields[f] + "'");
  }
  return e;
}

}  // namespace

std::string render_embedding(const EmbeddingDatum& e) {
  std::string out = "emb " + to_string(e.H) + " | ";
  for (std::size_t i = 0; i < e.M.size(); ++i) {
    if (i) out += "+";
    out += to_string(e.M[i]);
  }
  out += " | " + tables::render(e.p_cond) + " | ";
  out += e.expected_regular ? "yes" : "no";
  out += " | ";
  for (std::size_t i = 0; i < e.factors.size(); ++i) {
    if (i) out += " ";
    out += render_factor(e.factors[i]);
  }
  if (!e.note.empty()) out += " | note= " + e.note;
  return out;
}

EmbeddingStore EmbeddingStore::parse_text(const std::string& text, bool verify_checksum) {
  if (trim(text).empty()) throw parse_error("embeddings: empty file");
  EmbeddingStore store;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  bool have_checksum = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::string t = trim(line);
    if (line_no == 1) {
      if (t != "rtk-embeddings 1")
        throw schema_mismatch("embeddings: unsupported version header");
      store.lines_.push_back(line);
      continue;
    }
    if (t.rfind("checksum ", 0) == 0 && !have_checksum) {
      have_checksum = true;
      store.declared_checksum_ = std::strtoull(t.substr(9).c_str(), nullptr, 16);
      store.lines_.push_back("\x02");
      continue;
    }
    if (t.empty() || t[0] == '#') {
      store.lines_.push_back(line);
      continue;
    }
    if (t.rfind("emb ", 0) != 0)
      throw parse_error("embeddings: line " + std::to_string(line_no) + ": expected 'emb'");
    store.data_.push_back(parse_emb(t.substr(4), line_no));
    store.lines_.push_back("\x01");
  }
  if (!have_checksum) throw schema_mismatch("embeddings: missing checksum header");
  if (verify_checksum && store.checksum() != store.declared_checksum_)
    throw schema_mismatch("embeddings: checksum mismatch (declared " +
                          hex16(store.declared_checksum_) + ", computed " +
                          hex16(store.checksum()) + ")");
  return store;
}

EmbeddingStore EmbeddingStore::load(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw parse_error("embeddings: cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_text(ss.str());
}

std::uint64_t EmbeddingStore::checksum() const {
  std::string all;
  for (const EmbeddingDatum& e : data_) all += render_embedding(e) + "\n";
  return fnv1a64(all);
}

std::string EmbeddingStore::serialize() const {
  std::string out;
  std::size_t idx = 0;
  for (const std::string& l : lines_) {
    if (l == "\x01") out += render_embedding(data_[idx++]) + "\n";
    else if (l == "\x02") out += "checksum " + hex16(checksum()) + "\n";
    else
      out += l + "\n";
  }
  return out;
}

std::vector<const EmbeddingDatum*> EmbeddingStore::find(SimpleType H,
                                                        std::vector<SimpleType> M,
                                                        std::int64_t p) const {
  std::sort(M.begin(), M.end());
  std::vector<const EmbeddingDatum*> out;
  for (const EmbeddingDatum& e : data_) {
    if (e.H != H) continue;
    std::vector<SimpleType> f = e.M;
    std::sort(f.begin(), f.end());
    if (f != M) continue;
    tables::Env env{{'n', e.H.rank}, {'p', p}};
    if (tables::eval(e.p_cond, env)) out.push_back(&e);
  }
  return out;
}

Int zero_weight_sum(const EmbeddingDatum& e) {
  Int total = 0;
  for (const EmbeddingFactor& f : e.factors) {
    if (!f.weyl_level) {
      if (!f.stated_m0)
        throw missing_stated_multiplicity("irreducible factor lacks a stated multiplicity");
      total += *f.stated_m0;
      continue;
    }
    Int m0 = 1;  // blockwise product of Weyl-level zero multiplicities
    for (std::size_t b = 0; b < f.blocks.size(); ++b) {
      const RootDatum& datum = build_root_datum(e.M[b]);
      m0 *= freudenthal_multiplicity(datum, f.blocks[b],
                                     Weight(static_cast<std::size_t>(e.M[b].rank), 0));
      if (m0 == 0) break;
    }
    total += m0;
  }
  return total;
}

bool regular_torus_in_exceptional(const EmbeddingDatum& e) {
  return zero_weight_sum(e) == e.H.rank;
}

const EmbeddingStore& default_embedding_store() {
  static EmbeddingStore store = EmbeddingStore::load(tables::default_embeddings_path());
  return store;
}

}  // namespace rtk
