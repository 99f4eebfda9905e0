#!/usr/bin/env python
from setuptools import setup, find_packages


def load_long_description():
    with open("README.md", "r") as fh:
        long_description = fh.read()
    return long_description


setup(
    name='ctxdegree',
    version='0.1.0',
    description='Exact contextuality measures for Bell and Leggett-Garg systems with signaling',
    long_description=load_long_description(),
    long_description_content_type="text/markdown",
    keywords=['contextuality', 'bell', 'chsh', 'leggett-garg', 'polytope', 'linear programming'],
    classifiers=[
        'License :: OSI Approved :: Apache Software License',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: Implementation :: CPython',
        'Topic :: Scientific/Engineering :: Mathematics',
        'Topic :: Scientific/Engineering :: Physics',
    ],
    packages=find_packages(exclude=['docs*', 'tests*']),
    python_requires='>=3.8',
    install_requires=[],
    include_package_data=True,
    package_data={'ctxdegree': ['data/*.json']},
    entry_points={
        'console_scripts': [
            'ctxdegree=ctxdegree.cli:main',
        ],
    },
)
