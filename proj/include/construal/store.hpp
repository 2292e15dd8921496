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

#ifndef CONSTRUAL_STORE_HPP_
#define CONSTRUAL_STORE_HPP_

#include <map>
#include <optional>
#include <set>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

#include "construal/agreement.hpp"
#include "construal/corpus.hpp"
#include "construal/lexicon.hpp"
#include "construal/taxonomy.hpp"

namespace construal {

enum class Stage { kRoleOnly, kFunctionOnly, kJoint };

std::string_view StageName(Stage stage);
Stage ParseStage(std::string_view name);  // throws kSyntax

struct TaskAssignment {
  std::string task_id;
  std::string doc_id;
  std::string sent_id;
  Span span;
  std::string form;
  std::string language;
  std::vector<std::string> tokens;
  Stage stage = Stage::kJoint;
  std::vector<Construal> suggested;
};

// Append-only durable log of accepted records, one annotation TSV line each.
// Every append is flushed to disk before it returns.
class AppendLog {
 public:
  explicit AppendLog(std::string path);
  ~AppendLog();
  AppendLog(const AppendLog&) = delete;
  AppendLog& operator=(const AppendLog&) = delete;

  void Append(const AnnotationRecord& r);
  // Records already in the log, in append order. Empty if the file is absent.
  std::vector<AnnotationRecord> Replay() const;
  const std::string& path() const { return path_; }

 private:
  std::string path_;
  int fd_ = -1;
};

// The corpus store behind the annotation service. Readers share a lock;
// every mutation goes through one exclusive writer that persists the record
// before acknowledging it. Annotator records are never modified; gold
// records are added by adjudication and replaced only on a forced
// re-adjudication.
class AnnotationStore {
 public:
  struct Options {
    std::string log_path;                 // empty: in-memory only
    std::vector<std::string> annotators;  // registered ids
    size_t annotators_per_target = 2;
  };

  // `targets` adds targets that have no seed records yet. Replays the log if
  // one exists at options.log_path.
  AnnotationStore(Hierarchy hierarchy, Lexicon lexicon, Corpus seed,
                  std::vector<TargetKey> targets, Options options);

  void RegisterAnnotator(std::string id);
  bool IsRegistered(std::string_view id) const;

  // The lowest target (doc_id, sent_id, span) this annotator has not
  // annotated that has fewer than `annotators_per_target` annotators and no
  // gold record. Repeated calls return the same open task.
  std::optional<TaskAssignment> NextTask(std::string_view annotator, Stage stage);

  AnnotationRecord SubmitAnnotation(std::string_view annotator, std::string_view task_id,
                                    std::string_view construal);

  AnnotationRecord SubmitAdjudication(const TargetKey& target, std::string_view construal,
                                      std::string_view expert_id, bool force);

  std::string Export() const;
  std::vector<AnnotationRecord> Records() const;
  std::vector<QueueItem> Disagreements() const;
  CorpusStats Stats() const;

  const Hierarchy& hierarchy() const { return hierarchy_; }
  const Lexicon& lexicon() const { return lexicon_; }

 private:
  struct Task {
    std::string annotator;
    Stage stage;
    TargetKey target;
    bool open = true;
  };

  void AddRecordLocked(AnnotationRecord r);
  std::string FormOf(const TargetKey& key) const;

  const Hierarchy hierarchy_;
  const Lexicon lexicon_;
  Corpus corpus_;
  Options options_;
  std::optional<AppendLog> log_;

  mutable std::shared_mutex mu_;
  std::set<TargetKey> targets_;
  std::set<std::string, std::less<>> annotators_;
  std::map<TargetKey, std::set<std::string>> annotated_by_;  // non-gold only
  std::set<TargetKey> gold_;
  std::map<std::string, Task, std::less<>> tasks_;
  size_t next_task_ = 1;
};

}  // namespace construal

#endif  // CONSTRUAL_STORE_HPP_
