/*
 *   Copyright 2026 The ua Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/**
 * @file
 *
 * Umbrella header for the whole library.
 */

#pragma once

#include "ua/algebra.hpp"
#include "ua/brace.hpp"
#include "ua/catalog.hpp"
#include "ua/cli.hpp"
#include "ua/congruence.hpp"
#include "ua/digroup.hpp"
#include "ua/envcat.hpp"
#include "ua/error.hpp"
#include "ua/groups.hpp"
#include "ua/heap.hpp"
#include "ua/homomorphism.hpp"
#include "ua/inner_sdp.hpp"
#include "ua/io.hpp"
#include "ua/isomorphism.hpp"
#include "ua/outer_sdp.hpp"
#include "ua/partition.hpp"
#include "ua/term.hpp"
#include "ua/truss.hpp"
#include "ua/variety.hpp"
