from setuptools import setup, find_packages
from os import path
import re

here = path.abspath(path.dirname(__file__))

# Get the long description from the README file
with open(path.join(here, 'README.rst'), encoding='utf-8') as f:
    long_description = f.read()


# Get the version of the packages
def read(*parts):
    with open(path.join(here, *parts), 'r') as fp:
        return fp.read()


def find_version(*file_paths):
    version_file = read(*file_paths)
    version_match = re.search(r"^__version__ = ['\"]([^'\"]*)['\"]",
                              version_file, re.M)
    if version_match:
        return version_match.group(1)
    raise RuntimeError("Unable to find version string.")


setup(
    # Name of your project. Determine how users can install this project, e.g.:
    #
    # $ pip install pyOrbital
    #
    # There are some restrictions on what makes a valid project name
    # specification here:
    # https://packaging.python.org/specifications/core-metadata/#name
    name='pyOrbital',

    # Versions should comply with PEP 440:
    # https://www.python.org/dev/peps/pep-0440/
    version=find_version("pyOrbital", "__init__.py"),

    # One-line description
    description='Exact local orbital integrals and singular transfer checks',

    # This field corresponds to the "Description" metadata field:
    # https://packaging.python.org/specifications/core-metadata/#description-optional
    long_description=long_description,
    long_description_content_type='text/x-rst',

    url='https://github.com/pyOrbital/pyOrbital',

    author='pyOrbital developers',

    # Classifiers help users find your project by categorizing it.
    #
    # For a list of valid classifiers, see
    # https://pypi.python.org/pypi?%3Aaction=list_classifiers
    classifiers=[  # Optional
        'Development Status :: 3 - Alpha',

        # Indicate who your project is intended for
        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Mathematics',

        'License :: OSI Approved :: BSD License',

        'Programming Language :: Python :: 3',
    ],

    # Note that this is a string of words separated by whitespace, not a list.
    keywords='p-adic orbital-integrals relative-trace-formula L-factors '
             'transfer python open-source',  # Optional

    packages=find_packages(exclude=['docs', 'tests']),  # Required

    # This field lists other packages that your project depends on to run.
    # Any package you put here will be installed by pip when your project is
    # installed, so they must be valid existing projects.
    install_requires=[
        'joblib', 'numpy', 'pandas', 'pyexcel', 'pyexcel-ods3', 'sympy>=1.13'
    ],  # Optional

    # Command-line workbench
    entry_points={
        'console_scripts': [
            'pyorbital=pyOrbital.workbench.cli:main',
        ],
    },

    license='BSD (3-clause)',

    setup_requires=['pytest-runner'],
    tests_require=['pytest'],

    zip_safe=False)
