/*
   Copyright 2026 looptop contributors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef LOOPTOP_LOOPTOP_HPP
#define LOOPTOP_LOOPTOP_HPP

#include "looptop/annulus.hpp"
#include "looptop/chain_complex.hpp"
#include "looptop/chain_maps.hpp"
#include "looptop/exact_matrix.hpp"
#include "looptop/filtered.hpp"
#include "looptop/graded.hpp"
#include "looptop/identities.hpp"
#include "looptop/local_systems.hpp"
#include "looptop/profile.hpp"
#include "looptop/scalars.hpp"
#include "looptop/sphere.hpp"
#include "looptop/svg.hpp"
#include "looptop/tensor_operator.hpp"

#endif
