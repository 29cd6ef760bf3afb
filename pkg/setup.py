"""fermatlab: exact-arithmetic checks, sweeps and an audit around a^n + b^n = c^n
"""

from setuptools import setup, find_packages


# readme file
def readme():
    with open('README.md') as f:
        return f.read()


# version without importing the package
def version():
    namespace = {}
    with open('src/fermatlab/_version.py') as f:
        exec(f.read(), namespace)
    return namespace['__version__']


# -----
# Setup
# -----
setup(name='fermatlab',
      version=version(),
      description='Exact-arithmetic verification toolkit for the generalized Fermat equation',
      long_description=readme(),
      long_description_content_type='text/markdown',
      classifiers=[
        'Development Status :: 3 - Alpha',
        'License :: OSI Approved :: Apache Software License',
        'Programming Language :: Python',
        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Mathematics',
      ],
      license='Apache License 2.0',
      packages=find_packages('./src'),
      package_dir={'': 'src'},
      zip_safe=False,
      tests_require=['pytest', 'hypothesis', 'sympy'],
      install_requires=['numpy', 'pandas>=1.5', 'rich'],
      python_requires=">=3.8",
      entry_points={"console_scripts": ["fermatlab = fermatlab.cli:entry_point"]}
      )
