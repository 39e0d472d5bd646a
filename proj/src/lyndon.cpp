#include "braidlab/lyndon.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <stdexcept>
#include <string>

namespace braidlab {

bool is_lyndon(const LWord& w) {
  if (w.empty()) return false;
  // strictly smaller than all of its proper rotations
  size_t n = w.size();
  for (size_t r = 1; r < n; r++) {
    // compare w with its rotation by r
    for (size_t i = 0; i < n; i++) {
      uint8_t a = w[i];
      uint8_t b = w[(i + r) % n];
      if (a < b) break;
      if (a > b) return false;
      if (i + 1 == n) return false;  // equal to a rotation: not primitive
    }
  }
  return true;
}

namespace {

std::vector<LWord> duval(uint32_t k, uint32_t d) {
  std::vector<LWord> out;
  if (k == 0 || d == 0) return out;
  // Duval's algorithm, keeping only words of length exactly d.
  std::vector<int> w{-1};
  while (!w.empty()) {
    w.back()++;
    size_t m = w.size();
    if (m == d) {
      LWord lw(w.begin(), w.end());
      out.push_back(lw);
    }
    while (w.size() < d) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == int(k) - 1) w.pop_back();
  }
  return out;
}

std::string cache_path(uint32_t k, uint32_t d) {
  const char* dir = std::getenv("BRAIDLAB_CACHE");
  if (!dir || !*dir) return {};
  return std::string(dir) + "/lyndon_" + std::to_string(k) + "_" +
         std::to_string(d) + ".txt";
}

bool load_cache(const std::string& path, uint32_t d, std::vector<LWord>& out) {
  std::ifstream in(path);
  if (!in) return false;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    LWord w;
    size_t pos = 0;
    while (pos < line.size()) {
      size_t next = line.find(',', pos);
      if (next == std::string::npos) next = line.size();
      w.push_back(uint8_t(std::stoul(line.substr(pos, next - pos))));
      pos = next + 1;
    }
    if (w.size() != d) return false;
    out.push_back(w);
  }
  return true;
}

void store_cache(const std::string& path, const std::vector<LWord>& words) {
  std::error_code ec;
  std::filesystem::create_directories(
      std::filesystem::path(path).parent_path(), ec);
  std::ofstream out(path);
  if (!out) return;
  for (auto& w : words) {
    for (size_t i = 0; i < w.size(); i++) {
      if (i) out << ',';
      out << unsigned(w[i]);
    }
    out << '\n';
  }
}

}  // namespace

const std::vector<LWord>& lyndon_words(uint32_t alphabet, uint32_t deg) {
  static std::map<std::pair<uint32_t, uint32_t>, std::vector<LWord>> memo;
  auto key = std::make_pair(alphabet, deg);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  std::vector<LWord> words;
  std::string path = cache_path(alphabet, deg);
  if (path.empty() || !load_cache(path, deg, words)) {
    words = duval(alphabet, deg);
    if (!path.empty()) store_cache(path, words);
  }
  return memo.emplace(key, std::move(words)).first->second;
}

size_t witt_number(uint32_t alphabet, uint32_t deg) {
  return lyndon_words(alphabet, deg).size();
}

std::pair<LWord, LWord> standard_factorization(const LWord& w) {
  if (w.size() < 2) throw std::invalid_argument("factorization needs |w| >= 2");
  // the right factor is the lexicographically least proper suffix
  size_t best = 1;
  for (size_t i = 2; i < w.size(); i++) {
    if (std::lexicographical_compare(w.begin() + i, w.end(),
                                     w.begin() + best, w.end()))
      best = i;
  }
  return {LWord(w.begin(), w.begin() + best), LWord(w.begin() + best, w.end())};
}

}  // namespace braidlab
