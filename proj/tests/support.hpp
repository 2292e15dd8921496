/* Copyright 2026 The Construal Toolkit Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef CONSTRUAL_TESTS_SUPPORT_HPP_
#define CONSTRUAL_TESTS_SUPPORT_HPP_

#include <filesystem>
#include <unistd.h>

#include <string>

#include "construal/corpus.hpp"
#include "construal/lexicon.hpp"
#include "construal/taxonomy.hpp"
#include "construal/text.hpp"

namespace construal::testing {

inline std::string DataPath(const std::string& name) {
  return std::string(CONSTRUAL_TEST_DATA_DIR) + "/" + name;
}
inline std::string FixturePath(const std::string& name) {
  return std::string(CONSTRUAL_TEST_FIXTURE_DIR) + "/" + name;
}

inline std::string ReadData(const std::string& name) { return ReadFile(DataPath(name)); }
inline std::string ReadFixture(const std::string& name) { return ReadFile(FixturePath(name)); }

inline const Hierarchy& BundledHierarchy() {
  static const Hierarchy h = Hierarchy::Load(ReadData("hierarchy.txt"));
  return h;
}
inline const Lexicon& BundledLexicon() {
  static const Lexicon lex = Lexicon::Load(ReadData("lexicon.txt"), BundledHierarchy());
  return lex;
}
inline RevisionMap BundledRevision() { return RevisionMap::Parse(ReadData("revision.txt")); }

inline LoadResult BundledCorpus() {
  return LoadCorpus(ReadData("corpus.docs.tsv"), ReadData("corpus.ann.tsv"), BundledHierarchy(),
                    &BundledLexicon());
}
inline LoadResult FixtureCorpus(const std::string& stem) {
  return LoadCorpus(ReadFixture(stem + ".docs.tsv"), ReadFixture(stem + ".ann.tsv"),
                    BundledHierarchy(), &BundledLexicon());
}

// A scratch directory removed on destruction.
class TempDir {
 public:
  TempDir() {
    path_ = std::filesystem::temp_directory_path() /
            ("construal-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter_++));
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  std::string File(const std::string& name) const { return (path_ / name).string(); }
  const std::filesystem::path& path() const { return path_; }

 private:
  static inline int counter_ = 0;
  std::filesystem::path path_;
};

}  // namespace construal::testing

#endif  // CONSTRUAL_TESTS_SUPPORT_HPP_
