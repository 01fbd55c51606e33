// Copyright 2026 The simplegames Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SIMPLEGAMES_SIMPLEGAMES_HPP
#define SIMPLEGAMES_SIMPLEGAMES_HPP

#include "simplegames/bounds.hpp"
#include "simplegames/codes.hpp"
#include "simplegames/coalition.hpp"
#include "simplegames/decompose.hpp"
#include "simplegames/error.hpp"
#include "simplegames/game.hpp"
#include "simplegames/io.hpp"
#include "simplegames/random.hpp"
#include "simplegames/verify.hpp"

#endif  // SIMPLEGAMES_SIMPLEGAMES_HPP
