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

#ifndef CONSTRUAL_SERVICE_HPP_
#define CONSTRUAL_SERVICE_HPP_

#include <string>

#include "construal/error.hpp"
#include "construal/store.hpp"
#include "json.hpp"

namespace httplib {
class Server;
}

namespace construal {

// HTTP status for a library error code.
int HttpStatusFor(ErrorCode code);

// JSON views. Field names follow the struct members.
nlohmann::json ToJson(const Span& span);
nlohmann::json ToJson(const TargetKey& key);
nlohmann::json ToJson(const AnnotationRecord& r);
nlohmann::json ToJson(const TaskAssignment& task);
nlohmann::json ToJson(const QueueItem& item);
nlohmann::json ToJson(const CorpusStats& stats);
nlohmann::json ToJson(const AdpositionEntry& entry);
nlohmann::json ToJson(const Hierarchy& h);

// Routes:
//   GET  /hierarchy
//   GET  /lexicon/{lang}/{form}
//   GET  /tasks/next?annotator=ID&stage=STAGE   (204 when nothing is left)
//   POST /annotations      {task_id, construal[, annotator]}; X-Annotator-Id
//   GET  /disagreements
//   POST /adjudications    {doc_id, sent_id, span, construal, expert_id[, force]}
//   GET  /export           annotation TSV
//   GET  /stats
// Errors come back as {"error": code, "message": text}.
void RegisterRoutes(httplib::Server& server, AnnotationStore& store);

}  // namespace construal

#endif  // CONSTRUAL_SERVICE_HPP_
