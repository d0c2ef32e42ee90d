# Copyright (c) 2020, NVIDIA CORPORATION. All rights reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import os

from setuptools import find_packages
from setuptools import setup


def version(filename='VERSION'):
    with open(os.path.join(filename)) as f:
        project_version = f.read().strip()
    return project_version


def req_file(filename):
    with open(os.path.join(filename)) as f:
        content = f.readlines()
    return [
        x.strip() for x in content if x.strip() and not x.startswith("#")
    ]


project_version = version()
install_requires = req_file("requirements.txt")

setup(
    name='zafa',
    version=project_version,
    description=
    "Character tables, central Fourier algebras, amenability constants, "
    "hypergroups and SU(2) point derivations for finite and compact groups",
    license='Apache 2.0',
    keywords=[
        'group theory', 'character table', 'fourier algebra', 'hypergroup',
        'amenability'
    ],
    classifiers=[
        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Mathematics',
        'License :: OSI Approved :: Apache Software License',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.8',
        'Environment :: Console',
        'Natural Language :: English',
        'Operating System :: OS Independent',
    ],
    entry_points={'console_scripts': ['zafa = zafa.entrypoint:main']},
    install_requires=install_requires,
    extras_require={'test': ['hypothesis>=5.41.0']},
    packages=find_packages(exclude=("tests", )),
    python_requires='>=3.8',
    zip_safe=False,
)
