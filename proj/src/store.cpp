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

#include "construal/store.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <mutex>

#include "construal/error.hpp"
#include "construal/text.hpp"

namespace construal {

std::string_view StageName(Stage stage) {
  switch (stage) {
    case Stage::kRoleOnly: return "role-only";
    case Stage::kFunctionOnly: return "function-only";
    case Stage::kJoint: return "joint";
  }
  return "joint";
}

Stage ParseStage(std::string_view name) {
  if (name == "role-only") return Stage::kRoleOnly;
  if (name == "function-only") return Stage::kFunctionOnly;
  if (name == "joint" || name.empty()) return Stage::kJoint;
  throw Error(ErrorCode::kSyntax, "unknown stage '" + std::string(name) +
                                      "' (expected role-only, function-only or joint)");
}

AppendLog::AppendLog(std::string path) : path_(std::move(path)) {
  fd_ = ::open(path_.c_str(), O_WRONLY | O_CREAT | O_APPEND | O_CLOEXEC, 0644);
  if (fd_ < 0) {
    throw Error(ErrorCode::kIo, "cannot open log " + path_ + ": " + std::strerror(errno));
  }
}

AppendLog::~AppendLog() {
  if (fd_ >= 0) ::close(fd_);
}

void AppendLog::Append(const AnnotationRecord& r) {
  const std::string line = FormatAnnotationLine(r) + "\n";
  size_t done = 0;
  while (done < line.size()) {
    const ssize_t n = ::write(fd_, line.data() + done, line.size() - done);
    if (n < 0) {
      if (errno == EINTR) continue;
      throw Error(ErrorCode::kIo, "write to " + path_ + " failed: " + std::strerror(errno));
    }
    done += static_cast<size_t>(n);
  }
  if (::fsync(fd_) != 0) {
    throw Error(ErrorCode::kIo, "fsync of " + path_ + " failed: " + std::strerror(errno));
  }
}

std::vector<AnnotationRecord> AppendLog::Replay() const {
  std::vector<AnnotationRecord> out;
  if (!std::filesystem::exists(path_)) return out;
  const std::string text = ReadFile(path_);
  int line_no = 0;
  for (std::string_view line : Lines(text)) {
    ++line_no;
    if (IsBlankOrComment(line)) continue;
    out.push_back(ParseAnnotationLine(line, line_no));
  }
  return out;
}

AnnotationStore::AnnotationStore(Hierarchy hierarchy, Lexicon lexicon, Corpus seed,
                                 std::vector<TargetKey> targets, Options options)
    : hierarchy_(std::move(hierarchy)),
      lexicon_(std::move(lexicon)),
      corpus_(std::move(seed)),
      options_(std::move(options)) {
  for (auto& a : options_.annotators) annotators_.insert(a);
  std::vector<AnnotationRecord> seed_records = std::move(corpus_.records);
  corpus_.records.clear();
  for (auto& r : seed_records) AddRecordLocked(std::move(r));
  for (auto& t : targets) {
    const Sentence* s = corpus_.FindSentence(t.doc_id, t.sent_id);
    if (s == nullptr) {
      throw Error(ErrorCode::kUnknownDocument, "target " + t.ToString() + " names an unknown sentence");
    }
    if (t.span.start < 0 || t.span.start >= t.span.end ||
        t.span.end > static_cast<int>(s->tokens.size())) {
      throw Error(ErrorCode::kSpanOutOfRange, "target " + t.ToString() + " is out of range");
    }
    targets_.insert(std::move(t));
  }
  if (!options_.log_path.empty()) {
    {
      AppendLog reader(options_.log_path);
      for (auto& r : reader.Replay()) {
        ValidateRecord(corpus_, hierarchy_, r);
        AddRecordLocked(std::move(r));
      }
    }
    log_.emplace(options_.log_path);
  }
}

void AnnotationStore::AddRecordLocked(AnnotationRecord r) {
  const TargetKey key = r.key();
  targets_.insert(key);
  if (r.is_gold()) {
    gold_.insert(key);
    for (auto& existing : corpus_.records) {
      if (existing.is_gold() && existing.key() == key) {
        existing = std::move(r);
        return;
      }
    }
  } else {
    if (!annotated_by_[key].insert(r.annotator).second) {
      throw Error(ErrorCode::kDuplicateRecord,
                  "annotator " + r.annotator + " already annotated " + key.ToString());
    }
  }
  corpus_.records.push_back(std::move(r));
}

std::string AnnotationStore::FormOf(const TargetKey& key) const {
  for (const auto& r : corpus_.records) {
    if (r.key() == key) return r.form;
  }
  const Sentence* s = corpus_.FindSentence(key.doc_id, key.sent_id);
  std::vector<std::string> toks(s->tokens.begin() + key.span.start,
                                s->tokens.begin() + key.span.end);
  return Join(toks, " ");
}

void AnnotationStore::RegisterAnnotator(std::string id) {
  if (id.empty() || id == kGoldAnnotator || id.find_first_of(" \t\r\n") != std::string::npos) {
    throw Error(ErrorCode::kMalformedRecord, "invalid annotator id '" + id + "'");
  }
  std::unique_lock lock(mu_);
  annotators_.insert(std::move(id));
}

bool AnnotationStore::IsRegistered(std::string_view id) const {
  std::shared_lock lock(mu_);
  return annotators_.find(id) != annotators_.end();
}

std::optional<TaskAssignment> AnnotationStore::NextTask(std::string_view annotator,
                                                        Stage stage) {
  std::unique_lock lock(mu_);
  if (annotators_.find(annotator) == annotators_.end()) {
    throw Error(ErrorCode::kUnknownAnnotator,
                "annotator '" + std::string(annotator) + "' is not registered");
  }
  const std::string who(annotator);

  // Open tasks by target, excluding this annotator's own.
  std::map<TargetKey, std::set<std::string>> pending;
  const Task* own = nullptr;
  std::string own_id;
  for (const auto& [id, t] : tasks_) {
    if (!t.open) continue;
    if (t.annotator == who && t.stage == stage) {
      if (own == nullptr || t.target < own->target) {
        own = &t;
        own_id = id;
      }
      continue;
    }
    pending[t.target].insert(t.annotator);
  }

  std::optional<TargetKey> chosen;
  std::string task_id;
  if (own != nullptr) {
    chosen = own->target;
    task_id = own_id;
  } else {
    for (const auto& key : targets_) {
      if (gold_.count(key)) continue;
      std::set<std::string> people;
      if (auto it = annotated_by_.find(key); it != annotated_by_.end()) people = it->second;
      if (people.count(who)) continue;
      if (auto it = pending.find(key); it != pending.end()) {
        if (it->second.count(who)) continue;
        people.insert(it->second.begin(), it->second.end());
      }
      if (people.size() >= options_.annotators_per_target) continue;
      chosen = key;
      break;
    }
    if (!chosen) return std::nullopt;
    char buf[32];
    std::snprintf(buf, sizeof(buf), "task-%06zu", next_task_++);
    task_id = buf;
    tasks_[task_id] = Task{who, stage, *chosen, true};
  }

  const Sentence* s = corpus_.FindSentence(chosen->doc_id, chosen->sent_id);
  TaskAssignment a;
  a.task_id = task_id;
  a.doc_id = chosen->doc_id;
  a.sent_id = chosen->sent_id;
  a.span = chosen->span;
  a.form = FormOf(*chosen);
  a.language = corpus_.LanguageOf(chosen->doc_id);
  a.tokens = s->tokens;
  a.stage = stage;
  a.suggested = lexicon_.SuggestConstruals(a.language, a.form, s->text);
  if (stage == Stage::kRoleOnly) {
    for (auto& c : a.suggested) {
      c.functions.clear();
      c.metaphoric = false;
    }
    std::vector<Construal> unique;
    for (auto& c : a.suggested) {
      if (std::find(unique.begin(), unique.end(), c) == unique.end()) unique.push_back(c);
    }
    a.suggested = std::move(unique);
  }
  return a;
}

AnnotationRecord AnnotationStore::SubmitAnnotation(std::string_view annotator,
                                                   std::string_view task_id,
                                                   std::string_view construal) {
  Construal c = ParseConstrual(construal);
  ValidateConstrual(hierarchy_, c);

  std::unique_lock lock(mu_);
  const auto it = tasks_.find(task_id);
  if (it == tasks_.end()) {
    throw Error(ErrorCode::kUnknownTask, "unknown task " + std::string(task_id));
  }
  Task& task = it->second;
  if (task.annotator != annotator) {
    throw Error(ErrorCode::kTaskNotAssigned, "task " + std::string(task_id) +
                                                 " is not assigned to " + std::string(annotator));
  }
  if (!task.open) {
    throw Error(ErrorCode::kTaskClosed, "task " + std::string(task_id) + " is already closed");
  }
  if (task.stage == Stage::kRoleOnly && !c.has_null_function()) {
    throw Error(ErrorCode::kMalformedRecord,
                "role-only tasks take a single label without a function");
  }

  AnnotationRecord r;
  r.doc_id = task.target.doc_id;
  r.sent_id = task.target.sent_id;
  r.target = task.target.span;
  r.form = FormOf(task.target);
  r.annotator = task.annotator;
  r.construal = std::move(c);
  r.note = "stage=" + std::string(StageName(task.stage));
  if (auto a = annotated_by_.find(task.target);
      a != annotated_by_.end() && a->second.count(r.annotator)) {
    throw Error(ErrorCode::kDuplicateRecord,
                "annotator " + r.annotator + " already annotated " + task.target.ToString());
  }
  if (log_) log_->Append(r);
  AddRecordLocked(r);
  task.open = false;
  return r;
}

AnnotationRecord AnnotationStore::SubmitAdjudication(const TargetKey& target,
                                                     std::string_view construal,
                                                     std::string_view expert_id, bool force) {
  const Construal chosen = ParseConstrual(construal);
  std::unique_lock lock(mu_);
  const auto updated =
      Adjudicate(corpus_.records, target, chosen, expert_id, hierarchy_, force);
  const AnnotationRecord* gold = nullptr;
  for (const auto& r : updated) {
    if (r.is_gold() && r.key() == target) gold = &r;
  }
  AnnotationRecord r = *gold;
  if (log_) log_->Append(r);
  AddRecordLocked(r);
  return r;
}

std::string AnnotationStore::Export() const {
  std::shared_lock lock(mu_);
  return SerializeAnnotations(corpus_.records);
}

std::vector<AnnotationRecord> AnnotationStore::Records() const {
  std::shared_lock lock(mu_);
  auto out = corpus_.records;
  SortCanonical(out);
  return out;
}

std::vector<QueueItem> AnnotationStore::Disagreements() const {
  std::shared_lock lock(mu_);
  return DisagreementQueue(corpus_.records);
}

CorpusStats AnnotationStore::Stats() const {
  std::shared_lock lock(mu_);
  return ComputeStats(corpus_.records, hierarchy_);
}

}  // namespace construal
