# Copyright 2026 The Monoscope Authors.
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#     http://www.apache.org/licenses/LICENSE-2.0
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Points the suite at the package assembled in the CMake build tree when
the tests run via ctest instead of an installed wheel."""

import os
import sys

_pkg_dir = os.environ.get("MONOSCOPE_PYTHONPATH")
if _pkg_dir:
    sys.path.insert(0, _pkg_dir)
