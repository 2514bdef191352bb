import pathlib
from setuptools import find_packages, setup


_here = pathlib.Path(__file__).resolve().parent
_version_file = _here / 'VERSION'
with _version_file.open('r') as f:
    _version = f.read().strip()

# keeps the version number in a single file
_libwmc_version_file = _here / 'libwmc' / 'python' / 'libwmc' / 'version.py'
with _libwmc_version_file.open('w') as f:
    f.write('__version__ = \'{}\'\n'.format(_version))

_wmclab_packages = (
        find_packages(include=['wmclab', 'wmclab.*']) +
        find_packages('libwmc/python'))

_long_desc = (_here / 'README.rst').read_text()

setup(
    name='wmclab',
    version=_version,
    description='Knowledge compilation and weighted model counting lab',
    long_description=_long_desc,
    long_description_content_type='text/x-rst',
    license='Apache License 2.0',
    keywords=['model counting', 'knowledge compilation', 'FBDD', 'lifted inference'],
    classifiers=[
        'Development Status :: 3 - Alpha',
        'License :: OSI Approved :: Apache Software License',
        'Operating System :: POSIX :: Linux',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10'],

    packages=_wmclab_packages,
    package_dir={
        'wmclab': 'wmclab',
        'libwmc': 'libwmc/python/libwmc'
    },
    entry_points={
        'console_scripts': [
            'wmclab=wmclab.wmclab:main']
    },
    python_requires='>=3.8, <4',
    install_requires=[
        'click>=8,<9',
        'msgpack>=1,<2',
        'networkx>=2.6,<4',
        'numpy>=1.22,<2',
        'yatiml>=0.10,<0.11'
    ],
    extras_require={
        'dev': [
            'tox'
        ]
    },
)
