# coding=utf-8
"""Setup package 'adder2d'."""

from setuptools import setup

with open('README.md') as file:
    long_description = file.read()

setup(
    name="adder2d",
    author="Michael Amrhein",
    author_email="michael@adrhinum.de",
    description="Quantum carry-lookahead adder on a 2D nearest-neighbour "
                "grid",
    long_description=long_description,
    long_description_content_type="text/markdown",
    package_dir={'': 'src'},
    packages=['adder2d'],
    package_data={'adder2d': ['py.typed']},
    install_requires=['numpy>=1.20'],
    entry_points={
        'console_scripts': ['adder2d = adder2d.cli:main'],
        },
    python_requires=">=3.8",
    license='BSD',
    keywords='quantum circuit adder nearest-neighbour depth',
    platforms='all',
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: BSD License",
        "Operating System :: OS Independent",
        "Programming Language :: Python",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: Implementation :: CPython",
        "Topic :: Scientific/Engineering :: Physics",
        "Topic :: Software Development :: Libraries :: Python Modules"
        ],
    zip_safe=False,
    )
